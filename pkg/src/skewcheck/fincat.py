"""Finite categories as dense integer tables.

Objects and morphisms are dense integer ids.  Every table is a total numpy
array using -1 as the sentinel for "undefined", so the exhaustive loops that
dominate the axiom checkers are plain integer gathers.

Composition orientation is fixed once and for all as ``comp[g, f] = g after
f``: the entry is defined exactly when ``dst(f) == src(g)``.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    CategoryValidationError,
    LawViolation,
    ShapeMismatch,
    UnknownObject,
)

MAX_OBJECTS = 64
MAX_MORPHISMS = 4096
SENTINEL = -1


def _freeze(arr, dtype=np.int64):
    out = np.ascontiguousarray(np.asarray(arr, dtype=dtype))
    out.setflags(write=False)
    return out


def gather(table, *index):
    """Sentinel-propagating table lookup, vectorized over index arrays.

    Any -1 appearing in an index propagates to -1 in the result, so partial
    structures can be threaded through composite expressions without masking
    logic at every call site.
    """
    index = [np.asarray(ix) for ix in index]
    ok = np.ones(np.broadcast_shapes(*(ix.shape for ix in index)), dtype=bool)
    for ix in index:
        ok = ok & (ix >= 0)
    clipped = tuple(np.where(ix >= 0, ix, 0) for ix in index)
    return np.where(ok, table[clipped], SENTINEL)


@dataclass(eq=False)
class FinCategory:
    """A finite category: object count plus src/dst/identity/comp tables."""

    n_objects: int
    src: np.ndarray  # (n_morphisms,)
    dst: np.ndarray  # (n_morphisms,)
    identity: np.ndarray  # (n_objects,) -> morphism id
    comp: np.ndarray  # (n_morphisms, n_morphisms), comp[g, f] = g∘f or -1

    @property
    def n_morphisms(self):
        return int(self.src.shape[0])

    @property
    def objects(self):
        return range(self.n_objects)

    def hom(self, a, b):
        """Morphism ids with source a and target b, in increasing id order."""
        for x in (a, b):
            if not 0 <= x < self.n_objects:
                raise UnknownObject(f"object {x} not in category with {self.n_objects} objects")
        return np.flatnonzero((self.src == a) & (self.dst == b))

    def compose(self, g, f):
        """g after f; -1 when the pair is not composable."""
        return int(self.comp[g, f])

    def is_identity(self, f):
        return self.src[f] == self.dst[f] and self.identity[self.src[f]] == f

    def inverse(self, f):
        """Two-sided inverse of f found by exhaustive search, or None."""
        a, b = int(self.src[f]), int(self.dst[f])
        for g in self.hom(b, a):
            if self.comp[g, f] == self.identity[a] and self.comp[f, g] == self.identity[b]:
                return int(g)
        return None

    def opposite(self):
        """Reverse all arrows; applying this twice returns equal tables."""
        return FinCategory(
            n_objects=self.n_objects,
            src=self.dst,
            dst=self.src,
            identity=self.identity,
            comp=_freeze(self.comp.T),
        )


def category_violations(n_objects, src, dst, identity, comp):
    """All category-law violations in the raw tables, with witnesses."""
    src = np.asarray(src, dtype=np.int64)
    dst = np.asarray(dst, dtype=np.int64)
    identity = np.asarray(identity, dtype=np.int64)
    comp = np.asarray(comp, dtype=np.int64)
    n_mor = src.shape[0]
    bad = []

    for a in range(n_objects):
        e = identity[a]
        if not (0 <= e < n_mor) or src[e] != a or dst[e] != a:
            bad.append(LawViolation("BadIdentity", (e,), f"identity of object {a} is not an endomorphism of {a}"))

    composable = dst[None, :] == src[:, None]  # composable[g, f]
    defined = comp >= 0
    for g, f in np.argwhere(composable & ~defined):
        bad.append(LawViolation("UndefinedComposite", (g, f), "composable pair has no composite"))
    for g, f in np.argwhere(~composable & defined):
        bad.append(LawViolation("UndefinedComposite", (g, f), "composite defined for non-composable pair"))
    for g, f in np.argwhere(composable & defined):
        h = comp[g, f]
        if not (0 <= h < n_mor) or src[h] != src[f] or dst[h] != dst[g]:
            bad.append(LawViolation("UndefinedComposite", (g, f), f"comp({g},{f})={h} has wrong endpoints"))
    if bad:
        return bad  # identity/associativity laws assume a structurally sound table

    for a in range(n_objects):
        e = identity[a]
        into = np.flatnonzero(dst == a)  # comp[e, f] for f into a
        wrong = into[comp[e, into] != into]
        for f in wrong:
            bad.append(LawViolation("BadIdentity", (e, f), f"comp(id_{a}, {f}) != {f}"))
        outof = np.flatnonzero(src == a)
        wrong = outof[comp[outof, e] != outof]
        for f in wrong:
            bad.append(LawViolation("BadIdentity", (f, e), f"comp({f}, id_{a}) != {f}"))

    # comp[h, comp[g, f]] == comp[comp[h, g], f] over all composable triples,
    # bucketed by the two middle objects so only genuine triples are touched
    into = [np.flatnonzero(dst == a) for a in range(n_objects)]
    outof = [np.flatnonzero(src == a) for a in range(n_objects)]
    for b in range(n_objects):
        fs_ids = into[b]
        if fs_ids.size == 0:
            continue
        for c in range(n_objects):
            gs_ids = outof[b][dst[outof[b]] == c]
            hs_ids = outof[c]
            if gs_ids.size == 0 or hs_ids.size == 0:
                continue
            gf = comp[np.ix_(gs_ids, fs_ids)]  # (g, f)
            hg = comp[np.ix_(hs_ids, gs_ids)]  # (h, g)
            lhs = comp[hs_ids[:, None, None], gf[None, :, :]]
            rhs = comp[hg[:, :, None], fs_ids[None, None, :]]
            diff = np.argwhere(lhs != rhs)
            for hi, gi, fi in diff[:8]:
                h, g, f = hs_ids[hi], gs_ids[gi], fs_ids[fi]
                bad.append(
                    LawViolation("NonAssociative", (h, g, f), f"h∘(g∘f) = {lhs[hi, gi, fi]} but (h∘g)∘f = {rhs[hi, gi, fi]}")
                )
            if len(bad) > 32:
                return bad
    return bad


def validate_category(n_objects, src, dst, identity, comp):
    """Build a FinCategory from raw tables, or raise with the violated laws."""
    src = np.asarray(src, dtype=np.int64)
    if n_objects < 1 or n_objects > MAX_OBJECTS:
        raise CategoryValidationError(
            [LawViolation("BadIdentity", (), f"object count {n_objects} outside 1..{MAX_OBJECTS}")]
        )
    if src.shape[0] > MAX_MORPHISMS:
        raise CategoryValidationError(
            [LawViolation("BadIdentity", (), f"morphism count {src.shape[0]} exceeds {MAX_MORPHISMS}")]
        )
    bad = category_violations(n_objects, src, dst, identity, comp)
    if bad:
        raise CategoryValidationError(bad)
    return FinCategory(
        n_objects=int(n_objects),
        src=_freeze(src),
        dst=_freeze(dst),
        identity=_freeze(identity),
        comp=_freeze(comp),
    )


@dataclass(eq=False)
class FinFunctor:
    source: FinCategory
    target: FinCategory
    obj_map: np.ndarray
    mor_map: np.ndarray


def validate_functor(functor):
    """Check that obj_map/mor_map preserve endpoints, identities, composites."""
    C, D = functor.source, functor.target
    om = np.asarray(functor.obj_map, dtype=np.int64)
    mm = np.asarray(functor.mor_map, dtype=np.int64)
    if om.shape != (C.n_objects,) or mm.shape != (C.n_morphisms,):
        raise ShapeMismatch("functor maps have wrong lengths")
    if om.min(initial=0) < 0 or om.max(initial=0) >= D.n_objects:
        raise ShapeMismatch("obj_map hits ids outside the target category")
    if mm.min(initial=0) < 0 or mm.max(initial=0) >= D.n_morphisms:
        raise ShapeMismatch("mor_map hits ids outside the target category")
    if not (np.array_equal(D.src[mm], om[C.src]) and np.array_equal(D.dst[mm], om[C.dst])):
        raise ShapeMismatch("mor_map does not preserve src/dst under obj_map")
    if not np.array_equal(mm[C.identity], D.identity[om]):
        raise ShapeMismatch("functor does not preserve identities")
    lhs = gather(D.comp, mm[:, None], mm[None, :])
    rhs = gather(mm, C.comp)
    mask = C.comp >= 0
    if not np.array_equal(lhs[mask], rhs[mask]):
        raise ShapeMismatch("functor does not preserve composition")
    return FinFunctor(C, D, _freeze(om), _freeze(mm))


@dataclass(eq=False)
class Leg:
    """Functor data for one side of a naturality square.

    obj maps a tuple of object-id arrays to object ids; mor does the same for
    morphism ids.  Both are vectorized and propagate the -1 sentinel.
    """

    obj: callable
    mor: callable


def identity_leg(C):
    return Leg(obj=lambda xs: xs[0], mor=lambda fs: fs[0])


def constant_leg(C, obj_id):
    e = int(C.identity[obj_id])
    return Leg(
        obj=lambda xs: np.broadcast_to(np.int64(obj_id), np.asarray(xs[0]).shape),
        mor=lambda fs: np.broadcast_to(np.int64(e), np.asarray(fs[0]).shape),
    )


@dataclass(eq=False)
class MorphismFamily:
    """A family of morphisms indexed by object tuples.

    components has shape (n_objects,) * arity; -1 marks an absent component
    (allowed only at indices a partial tensor never produces).
    """

    arity: int
    components: np.ndarray

    def __post_init__(self):
        self.components = _freeze(self.components)
        if self.components.ndim != self.arity:
            raise ShapeMismatch(f"component array has ndim {self.components.ndim}, expected {self.arity}")

    def component(self, *index):
        return int(self.components[index])


def check_family_shape(C, family, left_leg, right_leg):
    """Every present component must run from left_leg(idx) to right_leg(idx)."""
    n = C.n_objects
    grids = np.meshgrid(*([np.arange(n)] * family.arity), indexing="ij", sparse=False)
    comps = family.components
    present = comps >= 0
    want_src = left_leg.obj(tuple(grids))
    want_dst = right_leg.obj(tuple(grids))
    ok = (gather(C.src, comps) == want_src) & (gather(C.dst, comps) == want_dst)
    bad = np.argwhere(present & ~ok)
    if bad.size:
        idx = tuple(int(i) for i in bad[0])
        raise ShapeMismatch(
            f"component at {idx} is morphism {comps[idx]}: "
            f"{C.src[comps[idx]]}->{C.dst[comps[idx]]}, expected {want_src[idx]}->{want_dst[idx]}"
        )


def is_natural(C, family, left_leg, right_leg, generators=None):
    """Does every naturality square for the family commute?

    The index category is C^arity; squares are checked for every tuple of
    morphisms, or only for tuples drawn from `generators` when a generating
    set is supplied.  Returns (True, None) or (False, witness_morphism_tuple).
    Squares whose legs or components are undefined (sentinel) are skipped.
    """
    check_family_shape(C, family, left_leg, right_leg)
    k = family.arity
    mor_ids = np.arange(C.n_morphisms) if generators is None else np.asarray(sorted(generators), dtype=np.int64)
    m = mor_ids.shape[0]
    if m == 0 or k == 0:
        return True, None
    # chunk over the first index axis; the remaining k-1 axes are broadcast
    rest = np.meshgrid(*([mor_ids] * (k - 1)), indexing="ij") if k > 1 else []
    for f0 in mor_ids:
        fs = [np.broadcast_to(np.int64(f0), rest[0].shape if rest else (1,))] + list(rest)
        srcs = tuple(gather(C.src, f) for f in fs)
        dsts = tuple(gather(C.dst, f) for f in fs)
        comp_s = gather(family.components, *srcs)
        comp_t = gather(family.components, *dsts)
        lmor = left_leg.mor(tuple(fs))
        rmor = right_leg.mor(tuple(fs))
        lhs = gather(C.comp, comp_t, lmor)  # component(t) ∘ L(f)
        rhs = gather(C.comp, rmor, comp_s)  # R(f) ∘ component(s)
        mask = (comp_s >= 0) & (comp_t >= 0) & (lmor >= 0) & (rmor >= 0)
        diff = np.argwhere(mask & (lhs != rhs))
        if diff.size:
            first = tuple(int(i) for i in diff[0])
            witness = (int(f0),) + tuple(int(r[first]) for r in rest)
            return False, witness
    return True, None
