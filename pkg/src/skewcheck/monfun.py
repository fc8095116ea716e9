"""Monoidal functors between skew monoidal structures.

A monoidal functor is a triple (F, φ, F₀) with φ_{X,Y} : F(X)⊗F(Y) -> F(X⊗'Y)
natural in both variables, subject to one hexagon tying φ to the two
associators and two squares tying F₀ to the unit constraints.  The hexagon is
a hypothesis, not part of the unit-map search: given (F, φ) satisfying it,
brute force over hom(J, F(I)) finds every F₀ making the squares commute, and
the count is asserted to be at most one.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NotAnIsomorphism, PreconditionUnmet, PropositionViolated, ShapeMismatch
from .fincat import FinFunctor, gather, validate_functor
from .skewstruct import SkewMonoidal
from .units import canonical_morphism, transport_unit


@dataclass(eq=False)
class MonoidalFunctorData:
    source: SkewMonoidal
    target: SkewMonoidal
    functor: FinFunctor
    phi: np.ndarray  # (n_source, n_source) -> target morphism id
    f0: int | None = None


@dataclass(frozen=True)
class FunctorReport:
    assoc_ok: bool
    unit_ok: bool | None  # None when no F₀ was supplied
    assoc_witness: tuple | None = None
    unit_witness: tuple | None = None


def identity_functor_data(sm):
    """The identity functor on a structure with identity φ and F₀."""
    C = sm.structure.base
    F = validate_functor(FinFunctor(C, C, np.arange(C.n_objects), np.arange(C.n_morphisms)))
    phi = gather(C.identity, sm.structure.obj_tensor)
    return MonoidalFunctorData(
        source=sm, target=sm, functor=F, phi=phi, f0=int(C.identity[sm.unit.unit_obj])
    )


def _check_phi_shapes(data):
    src_s = data.source.structure
    dst_s = data.target.structure
    C, D = src_s.base, dst_s.base
    om = data.functor.obj_map
    phi = np.asarray(data.phi, dtype=np.int64)
    if phi.shape != (C.n_objects, C.n_objects):
        raise ShapeMismatch("phi must be indexed by source object pairs")
    xs, ys = np.meshgrid(np.arange(C.n_objects), np.arange(C.n_objects), indexing="ij")
    want_src = gather(dst_s.obj_tensor, om[xs], om[ys])
    want_dst = gather(om, gather(src_s.obj_tensor, xs, ys))
    present = phi >= 0
    ok = (gather(D.src, phi) == want_src) & (gather(D.dst, phi) == want_dst)
    if not ok[present].all():
        x, y = (int(v) for v in np.argwhere(present & ~ok)[0])
        raise ShapeMismatch(f"phi[{x},{y}] does not run F(X)⊗F(Y) -> F(X⊗'Y)")
    if not np.array_equal(present, (want_src >= 0) & (want_dst >= 0)):
        raise ShapeMismatch("phi defined-ness does not match the tensor defined-ness")
    return phi


def phi_is_natural(data):
    """Naturality of φ in both variables over all source morphism pairs."""
    phi = _check_phi_shapes(data)
    src_s = data.source.structure
    dst_s = data.target.structure
    C, D = src_s.base, dst_s.base
    mm = data.functor.mor_map
    m = C.n_morphisms
    gs = np.arange(m)
    for f in range(m):
        f_arr = np.full(m, f)
        lhs = gather(
            D.comp,
            gather(phi, C.dst[f_arr], C.dst[gs]),
            gather(dst_s.mor_tensor, mm[f_arr], mm[gs]),
        )
        rhs = gather(
            D.comp,
            gather(mm, gather(src_s.mor_tensor, f_arr, gs)),
            gather(phi, C.src[f_arr], C.src[gs]),
        )
        bad = (lhs >= 0) & (rhs >= 0) & (lhs != rhs)
        if bad.any():
            return False, (f, int(np.argwhere(bad)[0][0]))
    return True, None


def _hexagon(data):
    """Eq-(8) status over all source triples: φ against the two associators."""
    src_s = data.source.structure
    dst_s = data.target.structure
    C, D = src_s.base, dst_s.base
    om, mm = data.functor.obj_map, data.functor.mor_map
    phi = np.asarray(data.phi, dtype=np.int64)
    n = C.n_objects
    xs, ys, zs = np.meshgrid(*([np.arange(n)] * 3), indexing="ij")
    t_yz = gather(src_s.obj_tensor, ys, zs)
    t_xy = gather(src_s.obj_tensor, xs, ys)
    alpha_img = gather(dst_s.assoc, om[xs], om[ys], om[zs])
    lhs = gather(
        D.comp,
        gather(phi, xs, t_yz),
        gather(D.comp, gather(dst_s.mor_tensor, D.identity[om[xs]], gather(phi, ys, zs)), alpha_img),
    )
    rhs = gather(
        D.comp,
        gather(mm, gather(src_s.assoc, xs, ys, zs)),
        gather(D.comp, gather(phi, t_xy, zs), gather(dst_s.mor_tensor, gather(phi, xs, ys), D.identity[om[zs]])),
    )
    bad = (lhs >= 0) & (rhs >= 0) & (lhs != rhs)
    if bad.any():
        return False, tuple(int(v) for v in np.argwhere(bad)[0])
    return True, None


def _unit_squares(data, f0):
    """Eq-(9) status of a candidate F₀ over all source objects."""
    src_s = data.source.structure
    dst_s = data.target.structure
    C, D = src_s.base, dst_s.base
    om, mm = data.functor.obj_map, data.functor.mor_map
    phi = np.asarray(data.phi, dtype=np.int64)
    I = data.source.unit.unit_obj
    lam_d, rho_d = data.target.unit.lam, data.target.unit.rho
    xs = np.arange(C.n_objects)
    f0s = np.full_like(xs, f0)
    lhs_l = gather(lam_d, om[xs])
    rhs_l = gather(
        D.comp,
        gather(mm, data.source.unit.lam[xs]),
        gather(D.comp, gather(phi, np.full_like(xs, I), xs), gather(dst_s.mor_tensor, f0s, D.identity[om[xs]])),
    )
    lhs_r = gather(mm, data.source.unit.rho[xs])
    rhs_r = gather(
        D.comp,
        gather(phi, xs, np.full_like(xs, I)),
        gather(D.comp, gather(dst_s.mor_tensor, D.identity[om[xs]], f0s), gather(rho_d, om[xs])),
    )
    bad = ((lhs_l >= 0) & (rhs_l >= 0) & (lhs_l != rhs_l)) | (
        (lhs_r >= 0) & (rhs_r >= 0) & (lhs_r != rhs_r)
    )
    if bad.any():
        return False, (int(np.argwhere(bad)[0][0]),)
    return True, None


def check_monoidal_functor(data):
    """Full report: φ naturality is a shape-level requirement, then Eq (8)/(9)."""
    natural, nat_witness = phi_is_natural(data)
    if not natural:
        raise ShapeMismatch(f"phi is not natural; failing morphism pair {nat_witness}")
    assoc_ok, assoc_w = _hexagon(data)
    unit_ok, unit_w = (None, None)
    if data.f0 is not None:
        f0 = int(data.f0)
        D = data.target.structure.base
        J = data.target.unit.unit_obj
        FI = int(data.functor.obj_map[data.source.unit.unit_obj])
        if D.src[f0] != J or D.dst[f0] != FI:
            raise ShapeMismatch(f"F0 must run {J} -> {FI}")
        unit_ok, unit_w = _unit_squares(data, f0)
    return FunctorReport(assoc_ok=assoc_ok, unit_ok=unit_ok, assoc_witness=assoc_w, unit_witness=unit_w)


def enumerate_unit_maps(functor, phi, source, target):
    """All F₀ candidates in hom(J, F(I)) passing both Eq-(9) squares.

    Requires Eq (8) for (F, φ); asserts the result has at most one element.
    """
    data = MonoidalFunctorData(source=source, target=target, functor=functor, phi=phi)
    natural, nat_w = phi_is_natural(data)
    if not natural:
        raise PreconditionUnmet([f"phi not natural at morphism pair {nat_w}"])
    assoc_ok, assoc_w = _hexagon(data)
    if not assoc_ok:
        raise PreconditionUnmet([f"hexagon fails at object triple {assoc_w}"])
    D = target.structure.base
    J = target.unit.unit_obj
    FI = int(functor.obj_map[source.unit.unit_obj])
    found = [int(f0) for f0 in D.hom(J, FI) if _unit_squares(data, int(f0))[0]]
    if len(found) > 1:
        raise PropositionViolated(f"{len(found)} distinct unit maps {found} satisfy both squares")
    return found


def classify(data):
    """lax always; normal when F₀ is invertible; strong when φ also is."""
    report = check_monoidal_functor(data)
    if not report.assoc_ok or report.unit_ok is not True:
        raise PreconditionUnmet(["not a monoidal functor; classification undefined"])
    D = data.target.structure.base
    normal = D.inverse(int(data.f0)) is not None
    phi = np.asarray(data.phi)
    strong = normal and all(D.inverse(int(p)) is not None for p in phi[phi >= 0])
    return {"lax": True, "normal": normal, "strong": strong}


def transported_unit_agreement(data):
    """With F₀ invertible, F(I) carries the transported unit and the canonical
    morphism from the target unit to it is F₀ itself; returns that equality."""
    D = data.target.structure.base
    f0 = int(data.f0)
    f0_inv = D.inverse(f0)
    if f0_inv is None:
        raise NotAnIsomorphism("F0 has no two-sided inverse")
    transported = transport_unit(data.target.structure, data.target.unit, f0_inv, f0)
    phi_canon = canonical_morphism(data.target.structure, data.target.unit, transported)
    return phi_canon == f0
