"""The category of units: exhaustive construction and the paper's propositions.

Units of a skew semimonoidal structure are triples (I, λ, ρ) passing the four
unit axioms (the pentagon plays no role, which build_units_category makes an
executable fact via its axiom mask).  Morphisms between units are the arrows
making both unit-morphism triangles commute; brute force over hom-sets finds
them all, and the uniqueness, isomorphism, determination, transport and
commutativity statements are asserted rather than reported: they hold in
every skew monoidal category, so a violation is a checker bug and raises
PropositionViolated.
"""

from dataclasses import dataclass

import numpy as np

from .budget import resolve_budget
from .errors import (
    NotAnIsomorphism,
    PreconditionUnmet,
    PropositionViolated,
    SearchBudgetExceeded,
    ShapeMismatch,
)
from .fincat import _freeze
from .skewstruct import (
    ALL_AXIOMS,
    AXIOMS,
    UNIT_AXIOMS,
    UnitCandidate,
    check_all,
    check_left_unit,
    check_mid_unit,
    check_pentagon,
    check_unit_unit,
    is_verified_unit,
    normality_class,
    validate_candidate,
)


@dataclass(eq=False)
class UnitsCategory:
    structure: object
    units: tuple  # UnitCandidate, in enumeration order
    morphism_sets: dict  # (i, j) -> tuple of morphism ids satisfying both triangles
    pentagon: object  # AxiomStatus when the mask included it, else None
    mask: frozenset


@dataclass(eq=False)
class EndMonoid:
    carrier: tuple  # morphism ids of hom(I, I)
    table: np.ndarray  # (k, k) indices into carrier
    unit_index: int


@dataclass(frozen=True)
class DeterminationReport:
    unit_count: int
    lambda_groups: int
    rho_groups: int


def is_unit_morphism(S, u, u_prime, f):
    """Both unit-morphism triangles: λ'_X∘(f⊗1_X) = λ_X and (1_X⊗f)∘ρ_X = ρ'_X.

    Quantified over every object X at which both sides are defined.
    """
    C = S.base
    f = int(f)
    if C.src[f] != u.unit_obj or C.dst[f] != u_prime.unit_obj:
        raise ShapeMismatch(
            f"morphism {f}: {C.src[f]}->{C.dst[f]} does not run between the unit objects "
            f"{u.unit_obj}->{u_prime.unit_obj}"
        )
    MT, comp, ident = S.mor_tensor, C.comp, C.identity
    for X in range(C.n_objects):
        e = ident[X]
        whisker = MT[f, e]  # f ⊗ 1_X
        if whisker >= 0 and u_prime.lam[X] >= 0 and u.lam[X] >= 0:
            if comp[u_prime.lam[X], whisker] != u.lam[X]:
                return False
        whisker = MT[e, f]  # 1_X ⊗ f
        if whisker >= 0 and u.rho[X] >= 0 and u_prime.rho[X] >= 0:
            if comp[whisker, u.rho[X]] != u_prime.rho[X]:
                return False
    return True


def canonical_morphism(S, u, u_prime):
    """The composite I --ρ'_I--> I⊗J --λ_J--> J; always a unit morphism."""
    I, J = u.unit_obj, u_prime.unit_obj
    rho_at_I = u_prime.rho[I]
    lam_at_J = u.lam[J]
    if rho_at_I < 0 or lam_at_J < 0:
        raise ShapeMismatch(f"I⊗J undefined for unit pair ({I}, {J})")
    phi = int(S.base.comp[lam_at_J, rho_at_I])
    if not is_unit_morphism(S, u, u_prime, phi):
        raise PropositionViolated(
            f"canonical composite {phi} between units at {I}, {J} fails the unit-morphism triangles"
        )
    return phi


def enumerate_units(S, axiom_mask=UNIT_AXIOMS, budget=None):
    """All (I, λ, ρ) passing naturality and the masked unit axioms.

    Exhausts every choice of components λ_X ∈ hom(I⊗X, X), ρ_X ∈ hom(X, X⊗I),
    pruning partial assignments as soon as a naturality square or a fully
    assigned axiom instance fails.  Candidates whose I⊗I is undefined are not
    considered (the unit-unit equation could never be evaluated for them; on
    total structures this excludes nothing).  Complete and duplicate-free,
    in lexicographic (I, λ, ρ) order.
    """
    mask = frozenset(axiom_mask) & UNIT_AXIOMS
    C = S.base
    n = C.n_objects
    T, MT, comp, ident = S.obj_tensor, S.mor_tensor, C.comp, C.identity
    budget = resolve_budget(budget)
    tried = 0
    results = []

    # morphisms whose later endpoint is k, for incremental naturality checks
    mors_at_step = [[] for _ in range(n)]
    for f in range(C.n_morphisms):
        mors_at_step[max(int(C.src[f]), int(C.dst[f]))].append(f)
    # axiom instances become checkable once their components are assigned
    left_at_step = [[] for _ in range(n)]
    right_at_step = [[] for _ in range(n)]
    mid_at_step = [[] for _ in range(n)]
    for X in range(n):
        for Y in range(n):
            txy = int(T[X, Y])
            if txy >= 0:
                left_at_step[max(X, txy)].append((X, Y))
                right_at_step[max(Y, txy)].append((X, Y))
            mid_at_step[max(X, Y)].append((X, Y))

    for I in range(n):
        if T[I, I] < 0:
            continue
        lam_opts, rho_opts = [], []
        feasible = True
        for X in range(n):
            tIX, tXI = int(T[I, X]), int(T[X, I])
            lo = [-1] if tIX < 0 else [int(v) for v in C.hom(tIX, X)]
            ro = [-1] if tXI < 0 else [int(v) for v in C.hom(X, tXI)]
            if not lo or not ro:
                feasible = False
                break
            lam_opts.append(lo)
            rho_opts.append(ro)
        if not feasible:
            continue

        lam = np.full(n, -1, dtype=np.int64)
        rho = np.full(n, -1, dtype=np.int64)
        e_I = int(ident[I])

        def natural_so_far(k):
            for f in mors_at_step[k]:
                a, b = int(C.src[f]), int(C.dst[f])
                lw = MT[e_I, f]  # 1_I ⊗ f
                if lw >= 0 and lam[a] >= 0 and lam[b] >= 0:
                    if comp[lam[b], lw] != comp[f, lam[a]]:
                        return False
                rw = MT[f, e_I]  # f ⊗ 1_I
                if rw >= 0 and rho[a] >= 0 and rho[b] >= 0:
                    if comp[rho[b], f] != comp[rw, rho[a]]:
                        return False
            return True

        def axioms_so_far(k):
            if "left_unit" in mask:
                for X, Y in left_at_step[k]:
                    txy = int(T[X, Y])
                    a = S.assoc[I, X, Y]
                    if a < 0 or lam[txy] < 0 or lam[X] < 0:
                        continue
                    lhs = comp[lam[txy], a]
                    rhs = MT[lam[X], ident[Y]]
                    if lhs >= 0 and rhs >= 0 and lhs != rhs:
                        return False
            if "right_unit" in mask:
                for X, Y in right_at_step[k]:
                    txy = int(T[X, Y])
                    a = S.assoc[X, Y, I]
                    if a < 0 or rho[txy] < 0 or rho[Y] < 0:
                        continue
                    lhs = comp[a, rho[txy]]
                    rhs = MT[ident[X], rho[Y]]
                    if lhs >= 0 and rhs >= 0 and lhs != rhs:
                        return False
            if "mid_unit" in mask:
                for X, Y in mid_at_step[k]:
                    txy = int(T[X, Y])
                    a = S.assoc[X, I, Y]
                    if a < 0 or rho[X] < 0 or lam[Y] < 0 or txy < 0:
                        continue
                    step1 = MT[rho[X], ident[Y]]
                    step2 = comp[a, step1] if step1 >= 0 else -1
                    upper = MT[ident[X], lam[Y]]
                    lhs = comp[upper, step2] if (step2 >= 0 and upper >= 0) else -1
                    if lhs >= 0 and lhs != ident[txy]:
                        return False
            if "unit_unit" in mask and k == I:
                lhs = comp[lam[I], rho[I]]
                if lhs >= 0 and lhs != e_I:
                    return False
            return True

        def extend(k):
            nonlocal tried
            if k == n:
                results.append(
                    UnitCandidate(unit_obj=I, lam=_freeze(lam.copy()), rho=_freeze(rho.copy()))
                )
                return
            for lv in lam_opts[k]:
                for rv in rho_opts[k]:
                    tried += 1
                    if tried > budget:
                        raise SearchBudgetExceeded(
                            f"unit enumeration exceeded budget {budget}",
                            partial_count=len(results),
                        )
                    lam[k], rho[k] = lv, rv
                    if natural_so_far(k) and axioms_so_far(k):
                        extend(k + 1)
            lam[k], rho[k] = -1, -1

        extend(0)
    return results


def build_units_category(S, axiom_mask=ALL_AXIOMS, budget=None, backend=None):
    """Enumerate units and all unit morphisms; assert uniqueness and isomorphy.

    For every ordered pair of units the set of arrows satisfying both
    triangles must be exactly {canonical morphism}, and the two canonical
    composites must be mutually inverse.  The pentagon never gates unit
    candidacy; when it is in the mask its status is evaluated and recorded,
    so masking it away must leave the result unchanged.
    """
    mask = frozenset(axiom_mask)
    units = enumerate_units(S, axiom_mask=mask & UNIT_AXIOMS, budget=budget)
    pentagon = check_pentagon(S, backend=backend) if "pentagon" in mask else None
    C = S.base
    morphism_sets = {}
    for i, u in enumerate(units):
        for j, v in enumerate(units):
            arrows = tuple(
                int(f) for f in C.hom(u.unit_obj, v.unit_obj) if is_unit_morphism(S, u, v, f)
            )
            morphism_sets[(i, j)] = arrows
            if len(arrows) != 1:
                raise PropositionViolated(
                    f"units {i} (object {u.unit_obj}) and {j} (object {v.unit_obj}) have "
                    f"{len(arrows)} unit morphisms {arrows}, expected exactly 1"
                )
            phi = canonical_morphism(S, u, v)
            if arrows[0] != phi:
                raise PropositionViolated(
                    f"unique unit morphism {arrows[0]} differs from the canonical composite {phi}"
                )
    for i, u in enumerate(units):
        for j, v in enumerate(units):
            phi_ij = morphism_sets[(i, j)][0]
            phi_ji = morphism_sets[(j, i)][0]
            if C.comp[phi_ji, phi_ij] != C.identity[u.unit_obj]:
                raise PropositionViolated(
                    f"φ_{{{j},{i}}} ∘ φ_{{{i},{j}}} is not the identity on object {u.unit_obj}"
                )
    return UnitsCategory(
        structure=S, units=tuple(units), morphism_sets=morphism_sets, pentagon=pentagon, mask=mask
    )


def determination_check(S, budget=None):
    """Either unit constraint determines the other across enumerated units."""
    units = enumerate_units(S, budget=budget)
    by_lambda, by_rho = {}, {}
    for u in units:
        by_lambda.setdefault((u.unit_obj, u.lam.tobytes()), []).append(u)
        by_rho.setdefault((u.unit_obj, u.rho.tobytes()), []).append(u)
    for key, group in by_lambda.items():
        if len(group) != 1:
            raise PropositionViolated(
                f"{len(group)} units share object {key[0]} and λ but differ in ρ"
            )
    for key, group in by_rho.items():
        if len(group) != 1:
            raise PropositionViolated(
                f"{len(group)} units share object {key[0]} and ρ but differ in λ"
            )
    return DeterminationReport(
        unit_count=len(units), lambda_groups=len(by_lambda), rho_groups=len(by_rho)
    )


def transport_unit(S, u, f, f_inv=None):
    """Pull the unit structure back along an isomorphism f : J -> I.

    Components are λ'_X = λ_X∘(f⊗1_X) and ρ'_X = (1_X⊗f⁻¹)∘ρ_X; the result
    is asserted to pass all four unit axioms.
    """
    C = S.base
    f = int(f)
    if C.dst[f] != u.unit_obj:
        raise ShapeMismatch(f"transport morphism must land in the unit object {u.unit_obj}")
    J = int(C.src[f])
    if f_inv is None:
        f_inv = C.inverse(f)
        if f_inv is None:
            raise NotAnIsomorphism(f"morphism {f} has no two-sided inverse")
    f_inv = int(f_inv)
    if C.comp[f, f_inv] != C.identity[u.unit_obj] or C.comp[f_inv, f] != C.identity[J]:
        raise NotAnIsomorphism(f"{f_inv} is not a two-sided inverse of {f}")
    n = C.n_objects
    MT, comp, ident = S.mor_tensor, C.comp, C.identity
    lam2 = np.full(n, -1, dtype=np.int64)
    rho2 = np.full(n, -1, dtype=np.int64)
    for X in range(n):
        if S.obj_tensor[J, X] >= 0:
            whisker = MT[f, ident[X]]
            if whisker < 0 or u.lam[X] < 0:
                raise ShapeMismatch(f"transported λ undefined at object {X}")
            lam2[X] = comp[u.lam[X], whisker]
        if S.obj_tensor[X, J] >= 0:
            whisker = MT[ident[X], f_inv]
            if whisker < 0 or u.rho[X] < 0:
                raise ShapeMismatch(f"transported ρ undefined at object {X}")
            rho2[X] = comp[whisker, u.rho[X]]
    cand = validate_candidate(S, J, lam2, rho2)
    if not is_verified_unit(S, cand):
        report = check_all(S, cand, enabled_axioms=UNIT_AXIOMS)
        raise PropositionViolated(f"transported candidate fails unit axioms: {report.failed()}")
    return cand


def tensor_square_candidate(S, u):
    """The candidate on I⊗I; a unit exactly when λ_I is invertible.

    Returns (candidate, is_unit, lambda_I_invertible) with the two booleans
    computed independently and cross-asserted.
    """
    C = S.base
    I = u.unit_obj
    J = int(S.obj_tensor[I, I])
    if J < 0 or u.lam[I] < 0 or u.rho[I] < 0:
        raise PreconditionUnmet(["I⊗I or its unit components are undefined"])
    n = C.n_objects
    MT, comp, ident = S.mor_tensor, C.comp, C.identity
    lam2 = np.full(n, -1, dtype=np.int64)
    rho2 = np.full(n, -1, dtype=np.int64)
    for X in range(n):
        if S.obj_tensor[J, X] >= 0:
            whisker = MT[u.lam[I], ident[X]]  # λ_I ⊗ 1_X
            if whisker >= 0 and u.lam[X] >= 0:
                lam2[X] = comp[u.lam[X], whisker]
        if S.obj_tensor[X, J] >= 0:
            whisker = MT[ident[X], u.rho[I]]  # 1_X ⊗ ρ_I
            if whisker >= 0 and u.rho[X] >= 0:
                rho2[X] = comp[whisker, u.rho[X]]
    if np.any((lam2 < 0) != (S.obj_tensor[J, :] < 0)) or np.any((rho2 < 0) != (S.obj_tensor[:, J] < 0)):
        raise PreconditionUnmet(["tensor-square components not constructible at every defined index"])
    cand = validate_candidate(S, J, lam2, rho2)
    is_unit = is_verified_unit(S, cand)
    lam_invertible = C.inverse(u.lam[I]) is not None
    if is_unit != lam_invertible:
        raise PropositionViolated(
            f"I⊗I candidate unit-hood ({is_unit}) differs from λ_I invertibility ({lam_invertible})"
        )
    return cand, is_unit, lam_invertible


def end_monoid_commutative(S, u):
    """Build End(I) and test commutativity; weak normality forces it."""
    C = S.base
    I = u.unit_obj
    carrier = tuple(int(f) for f in C.hom(I, I))
    index = {f: i for i, f in enumerate(carrier)}
    k = len(carrier)
    table = np.empty((k, k), dtype=np.int64)
    for i, g in enumerate(carrier):
        for j, f in enumerate(carrier):
            table[i, j] = index[int(C.comp[g, f])]
    commutative = all(
        C.comp[g, f] == C.comp[f, g] for i, g in enumerate(carrier) for f in carrier[i + 1 :]
    )
    monoid = EndMonoid(carrier=carrier, table=table, unit_index=index[int(C.identity[I])])
    if normality_class(S, u).weakly_normal and not commutative:
        raise PropositionViolated(f"weakly normal unit at object {I} has non-commutative End(I)")
    return monoid, commutative


def invertible_units_lemma_check(S, u):
    """Eq (5) follows from Eqs (2)-(3) plus invertible λ and ρ; return its truth."""
    failed = []
    if check_left_unit(S, u).status == "fail":
        failed.append("left unit axiom fails")
    if check_mid_unit(S, u).status == "fail":
        failed.append("mid unit axiom fails")
    C = S.base
    if not all(C.inverse(f) is not None for f in u.lam[u.lam >= 0]):
        failed.append("not every λ component is invertible")
    if not all(C.inverse(f) is not None for f in u.rho[u.rho >= 0]):
        failed.append("not every ρ component is invertible")
    if failed:
        raise PreconditionUnmet(failed)
    return check_unit_unit(S, u).status == "pass"
