"""Skew semimonoidal structures and the five-axiom checker.

A structure is a finite category with tensor tables and an associator family;
a unit candidate adds the two unit constraint families.  The five axioms are
decided by exhaustive evaluation of both legs of each diagram over all object
tuples, with the first failing tuple (lexicographic order) as witness.

Tables may be partial (-1 sentinel).  A diagram instance whose participating
objects or components are undefined is skipped, which on a total structure
never happens; partial structures arise only from the bounded Set-model
materialization.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import NotAUnit, PropositionViolated, ShapeMismatch
from .fincat import FinCategory, Leg, MorphismFamily, _freeze, gather, is_natural

AXIOMS = ("pentagon", "left_unit", "mid_unit", "right_unit", "unit_unit")
ALL_AXIOMS = frozenset(AXIOMS)
UNIT_AXIOMS = frozenset(AXIOMS[1:])


@dataclass(frozen=True)
class AxiomStatus:
    status: str  # "pass" | "fail" | "skipped"
    witness: tuple | None = None

    @property
    def ok(self):
        return self.status != "fail"


@dataclass(frozen=True)
class AxiomReport:
    """Per-axiom status; a fail always carries the witnessing object tuple."""

    statuses: tuple  # of (axiom_name, AxiomStatus), in AXIOMS order

    def __getitem__(self, axiom):
        for name, st in self.statuses:
            if name == axiom:
                return st
        raise KeyError(axiom)

    def all_pass(self):
        return all(st.status != "fail" for _, st in self.statuses)

    def failed(self):
        return tuple(name for name, st in self.statuses if st.status == "fail")

    def as_dict(self):
        return {
            name: {"status": st.status, "witness": None if st.witness is None else list(st.witness)}
            for name, st in self.statuses
        }


@dataclass(eq=False)
class TensorStructure:
    """Tensor tables plus associator over a finite base category."""

    base: FinCategory
    obj_tensor: np.ndarray  # (n, n) -> object id or -1
    mor_tensor: np.ndarray  # (m, m) -> morphism id or -1
    assoc: np.ndarray  # (n, n, n) -> morphism id or -1

    def assoc_family(self):
        return MorphismFamily(3, self.assoc)


@dataclass(eq=False)
class UnitCandidate:
    """(I, λ, ρ): candidate unit data for a tensor structure."""

    unit_obj: int
    lam: np.ndarray  # (n,) component ids, λ_X : I⊗X -> X
    rho: np.ndarray  # (n,) component ids, ρ_X : X -> X⊗I

    def key(self):
        return (self.unit_obj, self.lam.tobytes(), self.rho.tobytes())

    def equals(self, other):
        return (
            self.unit_obj == other.unit_obj
            and np.array_equal(self.lam, other.lam)
            and np.array_equal(self.rho, other.rho)
        )


@dataclass(eq=False)
class SkewMonoidal:
    """A structure together with a verified unit: the full 6-tuple."""

    structure: TensorStructure
    unit: UnitCandidate


# ---------------------------------------------------------------------------
# structure legs
# ---------------------------------------------------------------------------


def leg_ten3_left(S):
    """(X, Y, Z) -> (X⊗Y)⊗Z on objects and morphisms."""
    T, M = S.obj_tensor, S.mor_tensor
    return Leg(
        obj=lambda xs: gather(T, gather(T, xs[0], xs[1]), xs[2]),
        mor=lambda fs: gather(M, gather(M, fs[0], fs[1]), fs[2]),
    )


def leg_ten3_right(S):
    """(X, Y, Z) -> X⊗(Y⊗Z) on objects and morphisms."""
    T, M = S.obj_tensor, S.mor_tensor
    return Leg(
        obj=lambda xs: gather(T, xs[0], gather(T, xs[1], xs[2])),
        mor=lambda fs: gather(M, fs[0], gather(M, fs[1], fs[2])),
    )


def leg_tensor_unit_left(S, unit_obj):
    """X -> I⊗X; morphisms go to 1_I ⊗ f."""
    T, M = S.obj_tensor, S.mor_tensor
    e = int(S.base.identity[unit_obj])
    return Leg(
        obj=lambda xs: gather(T, np.broadcast_to(np.int64(unit_obj), np.asarray(xs[0]).shape), xs[0]),
        mor=lambda fs: gather(M, np.broadcast_to(np.int64(e), np.asarray(fs[0]).shape), fs[0]),
    )


def leg_tensor_unit_right(S, unit_obj):
    """X -> X⊗I; morphisms go to f ⊗ 1_I."""
    T, M = S.obj_tensor, S.mor_tensor
    e = int(S.base.identity[unit_obj])
    return Leg(
        obj=lambda xs: gather(T, xs[0], np.broadcast_to(np.int64(unit_obj), np.asarray(xs[0]).shape)),
        mor=lambda fs: gather(M, fs[0], np.broadcast_to(np.int64(e), np.asarray(fs[0]).shape)),
    )


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def validate_structure(base, obj_tensor, mor_tensor, assoc, generators=None):
    """Build a TensorStructure after checking bifunctoriality and naturality.

    Functoriality of the tensor is asserted through: preservation of identity
    pairs, whisker decomposition f⊗g = (f⊗1)∘(1⊗g) = (1⊗g)∘(f⊗1) (the two
    orders agreeing is exactly the interchange law, checked over all pairs),
    and preservation of composition in each slot separately.  Together these
    imply the joint functoriality of the product.  Naturality of the
    associator is checked over all morphism triples, or over the supplied
    generating set.
    """
    C = base
    n, m = C.n_objects, C.n_morphisms
    T = np.asarray(obj_tensor, dtype=np.int64)
    M = np.asarray(mor_tensor, dtype=np.int64)
    A = np.asarray(assoc, dtype=np.int64)
    if T.shape != (n, n) or M.shape != (m, m) or A.shape != (n, n, n):
        raise ShapeMismatch("tensor table shapes do not match the base category")
    if T.max(initial=-1) >= n or M.max(initial=-1) >= m or A.max(initial=-1) >= m:
        raise ShapeMismatch("tensor tables reference ids outside the base category")

    pair_def = T >= 0
    src_pair = pair_def[C.src[:, None], C.src[None, :]]
    dst_pair = pair_def[C.dst[:, None], C.dst[None, :]]
    want_def = src_pair & dst_pair
    if not np.array_equal(M >= 0, want_def):
        raise ShapeMismatch("mor_tensor defined-ness does not match obj_tensor defined-ness")

    fs, gs = np.meshgrid(np.arange(m), np.arange(m), indexing="ij")
    tsrc = gather(T, C.src[fs], C.src[gs])
    tdst = gather(T, C.dst[fs], C.dst[gs])
    ok = (gather(C.src, M) == tsrc) & (gather(C.dst, M) == tdst)
    if not ok[M >= 0].all():
        f, g = (int(v) for v in np.argwhere((M >= 0) & ~ok)[0])
        raise ShapeMismatch(f"mor_tensor[{f},{g}] has endpoints other than the tensored endpoints")

    ids = C.identity
    id_pairs = gather(M, ids[:, None], ids[None, :])
    want = gather(ids, T)
    mask = T >= 0
    if not np.array_equal(id_pairs[mask], want[mask]):
        raise ShapeMismatch("mor_tensor does not send identity pairs to identities")

    # whisker decomposition in both orders (second equality = interchange law)
    id_src_f = ids[C.src[fs]]
    id_dst_f = ids[C.dst[fs]]
    id_src_g = ids[C.src[gs]]
    id_dst_g = ids[C.dst[gs]]
    left_first = gather(C.comp, gather(M, fs, id_dst_g), gather(M, id_src_f, gs))
    right_first = gather(C.comp, gather(M, id_dst_f, gs), gather(M, fs, id_src_g))
    defined = M >= 0
    if not (np.array_equal(left_first[defined], M[defined]) and np.array_equal(right_first[defined], M[defined])):
        f, g = (int(v) for v in np.argwhere(defined & ((left_first != M) | (right_first != M)))[0])
        raise ShapeMismatch(f"tensor of ({f},{g}) violates whisker decomposition / interchange")

    # composition preservation in each slot: (f2∘f)⊗1_b == (f2⊗1_b)∘(f⊗1_b)
    f2s, f1s = np.meshgrid(np.arange(m), np.arange(m), indexing="ij")
    composable = C.comp >= 0
    for b in range(n):
        e = ids[b]
        whisker = M[:, e]  # f -> f⊗1_b
        lhs = gather(whisker, C.comp)
        rhs = gather(C.comp, whisker[f2s], whisker[f1s])
        mask = composable & (lhs >= 0) & (rhs >= 0)
        if not np.array_equal(lhs[mask], rhs[mask]):
            raise ShapeMismatch(f"tensoring with 1_{b} on the right does not preserve composition")
        whisker = M[e, :]
        lhs = gather(whisker, C.comp)
        rhs = gather(C.comp, whisker[f2s], whisker[f1s])
        mask = composable & (lhs >= 0) & (rhs >= 0)
        if not np.array_equal(lhs[mask], rhs[mask]):
            raise ShapeMismatch(f"tensoring with 1_{b} on the left does not preserve composition")

    S = TensorStructure(base=C, obj_tensor=_freeze(T), mor_tensor=_freeze(M), assoc=_freeze(A))

    a_def = A >= 0
    xs, ys, zs = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
    l_obj = leg_ten3_left(S).obj((xs, ys, zs))
    r_obj = leg_ten3_right(S).obj((xs, ys, zs))
    want_a = (l_obj >= 0) & (r_obj >= 0)
    if not np.array_equal(a_def, want_a):
        raise ShapeMismatch("associator defined-ness does not match tensor defined-ness")

    natural, witness = is_natural(C, S.assoc_family(), leg_ten3_left(S), leg_ten3_right(S), generators=generators)
    if not natural:
        raise ShapeMismatch(f"associator is not natural; failing morphism triple {witness}")
    return S


def validate_candidate(S, unit_obj, lam, rho, generators=None):
    """Build a UnitCandidate after shape and naturality checks."""
    C = S.base
    n = C.n_objects
    lam = np.asarray(lam, dtype=np.int64)
    rho = np.asarray(rho, dtype=np.int64)
    if lam.shape != (n,) or rho.shape != (n,):
        raise ShapeMismatch("unit constraint families must have one component per object")
    I = int(unit_obj)
    if not 0 <= I < n:
        raise ShapeMismatch(f"unit object {I} outside category")
    lam_def_want = S.obj_tensor[I, :] >= 0
    rho_def_want = S.obj_tensor[:, I] >= 0
    if not np.array_equal(lam >= 0, lam_def_want) or not np.array_equal(rho >= 0, rho_def_want):
        raise ShapeMismatch("unit component defined-ness does not match tensor defined-ness")
    u = UnitCandidate(unit_obj=I, lam=_freeze(lam), rho=_freeze(rho))
    natural, witness = is_natural(
        C, MorphismFamily(1, lam), leg_tensor_unit_left(S, I), Leg(obj=lambda xs: xs[0], mor=lambda fs: fs[0]),
        generators=generators,
    )
    if not natural:
        raise ShapeMismatch(f"λ is not natural; failing morphism {witness}")
    natural, witness = is_natural(
        C, MorphismFamily(1, rho), Leg(obj=lambda xs: xs[0], mor=lambda fs: fs[0]), leg_tensor_unit_right(S, I),
        generators=generators,
    )
    if not natural:
        raise ShapeMismatch(f"ρ is not natural; failing morphism {witness}")
    return u


# ---------------------------------------------------------------------------
# the five checks
# ---------------------------------------------------------------------------


def _first_fail(lhs, rhs):
    """First lexicographic index where both sides are defined yet differ."""
    bad = (lhs >= 0) & (rhs >= 0) & (lhs != rhs)
    if bad.any():
        return tuple(int(v) for v in np.argwhere(bad)[0])
    return None


def check_pentagon(S, backend=None):
    """Both composites of the pentagon agree for all object quadruples."""
    found, w, x, y, z = kernels.pentagon_scan(
        S.obj_tensor, S.mor_tensor, S.assoc, S.base.comp, S.base.identity, backend=backend
    )
    if found:
        return AxiomStatus("fail", (w, x, y, z))
    return AxiomStatus("pass")


def _unit_grids(S):
    n = S.base.n_objects
    return np.meshgrid(np.arange(n), np.arange(n), indexing="ij")


def check_left_unit(S, u):
    """λ_{X⊗Y} ∘ α_{I,X,Y} = λ_X ⊗ 1_Y for all pairs (X, Y)."""
    X, Y = _unit_grids(S)
    I = np.full_like(X, u.unit_obj)
    ids = S.base.identity
    lhs = gather(S.base.comp, gather(u.lam, gather(S.obj_tensor, X, Y)), gather(S.assoc, I, X, Y))
    rhs = gather(S.mor_tensor, gather(u.lam, X), ids[Y])
    w = _first_fail(lhs, rhs)
    return AxiomStatus("pass") if w is None else AxiomStatus("fail", w)


def check_mid_unit(S, u):
    """(1_X⊗λ_Y) ∘ α_{X,I,Y} ∘ (ρ_X⊗1_Y) = 1_{X⊗Y} for all pairs (X, Y)."""
    X, Y = _unit_grids(S)
    I = np.full_like(X, u.unit_obj)
    ids = S.base.identity
    step1 = gather(S.mor_tensor, gather(u.rho, X), ids[Y])
    step2 = gather(S.base.comp, gather(S.assoc, X, I, Y), step1)
    lhs = gather(S.base.comp, gather(S.mor_tensor, ids[X], gather(u.lam, Y)), step2)
    rhs = gather(ids, gather(S.obj_tensor, X, Y))
    w = _first_fail(lhs, rhs)
    return AxiomStatus("pass") if w is None else AxiomStatus("fail", w)


def check_right_unit(S, u):
    """α_{X,Y,I} ∘ ρ_{X⊗Y} = 1_X ⊗ ρ_Y for all pairs (X, Y)."""
    X, Y = _unit_grids(S)
    I = np.full_like(X, u.unit_obj)
    ids = S.base.identity
    lhs = gather(S.base.comp, gather(S.assoc, X, Y, I), gather(u.rho, gather(S.obj_tensor, X, Y)))
    rhs = gather(S.mor_tensor, ids[X], gather(u.rho, Y))
    w = _first_fail(lhs, rhs)
    return AxiomStatus("pass") if w is None else AxiomStatus("fail", w)


def check_unit_unit(S, u):
    """λ_I ∘ ρ_I = 1_I."""
    I = u.unit_obj
    lhs = gather(S.base.comp, u.lam[I], u.rho[I])
    rhs = S.base.identity[I]
    if lhs >= 0 and lhs != rhs:
        return AxiomStatus("fail", ())
    return AxiomStatus("pass")


def check_all(S, u, enabled_axioms=ALL_AXIOMS, backend=None):
    """Aggregate the five checks; axioms outside the mask report skipped."""
    enabled = frozenset(enabled_axioms)
    unknown = enabled - ALL_AXIOMS
    if unknown:
        raise ValueError(f"unknown axiom names {sorted(unknown)}")
    rows = []
    for name in AXIOMS:
        if name not in enabled:
            rows.append((name, AxiomStatus("skipped")))
        elif name == "pentagon":
            rows.append((name, check_pentagon(S, backend=backend)))
        elif name == "left_unit":
            rows.append((name, check_left_unit(S, u)))
        elif name == "mid_unit":
            rows.append((name, check_mid_unit(S, u)))
        elif name == "right_unit":
            rows.append((name, check_right_unit(S, u)))
        else:
            rows.append((name, check_unit_unit(S, u)))
    return AxiomReport(statuses=tuple(rows))


def is_verified_unit(S, u, enabled_axioms=UNIT_AXIOMS):
    """A unit is a candidate passing the four unit axioms (pentagon excluded)."""
    report = check_all(S, u, enabled_axioms=frozenset(enabled_axioms) & UNIT_AXIOMS)
    return report.all_pass()


# ---------------------------------------------------------------------------
# normality and reversal
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NormalityFlags:
    weakly_normal: bool
    left_normal: bool
    right_normal: bool
    normal: bool

    def as_dict(self):
        return {
            "weakly_normal": self.weakly_normal,
            "left_normal": self.left_normal,
            "right_normal": self.right_normal,
            "normal": self.normal,
        }


def normality_class(S, u):
    """Invertibility flags for a verified unit.

    weakly_normal is decided twice, by inverse search on λ_I and by the
    ρ_I∘λ_I = 1 equation; the two answers are cross-asserted since they are
    equivalent in the presence of the unit-unit axiom.
    """
    if not is_verified_unit(S, u):
        raise NotAUnit(f"candidate on object {u.unit_obj} fails a unit axiom")
    C = S.base
    I = u.unit_obj
    if S.obj_tensor[I, I] < 0 or u.lam[I] < 0 or u.rho[I] < 0:
        raise NotAUnit(f"I⊗I undefined for candidate on object {I}; normality undecidable")
    by_inverse = C.inverse(u.lam[I]) is not None
    ii = int(S.obj_tensor[I, I])
    by_equation = int(C.comp[u.rho[I], u.lam[I]]) == int(C.identity[ii])
    if by_inverse != by_equation:
        raise PropositionViolated(
            f"λ_I invertibility ({by_inverse}) disagrees with ρ_I∘λ_I = 1 ({by_equation})"
        )
    left = all(C.inverse(f) is not None for f in u.lam[u.lam >= 0])
    right = all(C.inverse(f) is not None for f in u.rho[u.rho >= 0])
    return NormalityFlags(
        weakly_normal=by_inverse,
        left_normal=left,
        right_normal=right,
        normal=left and right,
    )


def reverse_structure(S, u=None):
    """The same data on the opposite category with the tensor reversed.

    Objects keep their ids; X⊗'Y = Y⊗X, the associator at (X,Y,Z) is the old
    component at (Z,Y,X) read backwards, and λ/ρ trade places.  Applying this
    twice returns equal tables, and the axiom report of the result equals the
    input's with the left and right unit statuses exchanged.
    """
    base_op = S.base.opposite()
    S_op = TensorStructure(
        base=base_op,
        obj_tensor=_freeze(S.obj_tensor.T),
        mor_tensor=_freeze(S.mor_tensor.T),
        assoc=_freeze(np.transpose(S.assoc, (2, 1, 0))),
    )
    if u is None:
        return S_op, None
    u_op = UnitCandidate(unit_obj=u.unit_obj, lam=u.rho, rho=u.lam)
    return S_op, u_op


def swap_left_right(report):
    """The expected report of a reversed structure: left and right unit swap."""
    mapping = {"left_unit": "right_unit", "right_unit": "left_unit"}
    rows = {name: st for name, st in report.statuses}
    out = []
    for name in AXIOMS:
        out.append((name, rows[mapping.get(name, name)]))
    return AxiomReport(statuses=tuple(out))
