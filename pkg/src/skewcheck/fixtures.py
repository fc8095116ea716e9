"""Hand-built corpus structures used by tests, the CLI, and the census.

All fixtures are run through full validation at construction time, so a
fixture that builds at all is a verified category/structure/candidate.
"""

import numpy as np

from .skewstruct import SkewMonoidal, validate_candidate, validate_structure
from .fincat import validate_category


def terminal():
    """One object, one morphism, strict structure: everything is an identity."""
    C = validate_category(1, src=[0], dst=[0], identity=[0], comp=[[0]])
    S = validate_structure(C, obj_tensor=[[0]], mor_tensor=[[0]], assoc=np.zeros((1, 1, 1), dtype=np.int64))
    u = validate_candidate(S, 0, lam=[0], rho=[0])
    return SkewMonoidal(S, u)


def codisc2():
    """Codiscrete category on two objects with the constant tensor.

    Morphism a->b has id 2a+b; every hom-set is a singleton, so all diagrams
    commute and both objects carry a (forced) unit structure.  The returned
    candidate sits at object 0.
    """
    src = [0, 0, 1, 1]
    dst = [0, 1, 0, 1]
    comp = [
        [2 * src[f] + dst[g] if dst[f] == src[g] else -1 for f in range(4)]
        for g in range(4)
    ]
    C = validate_category(2, src=src, dst=dst, identity=[0, 3], comp=comp)
    S = validate_structure(
        C,
        obj_tensor=np.zeros((2, 2), dtype=np.int64),
        mor_tensor=np.zeros((4, 4), dtype=np.int64),
        assoc=np.zeros((2, 2, 2), dtype=np.int64),
    )
    u = validate_candidate(S, 0, lam=[0, 1], rho=[0, 2])
    return SkewMonoidal(S, u)


def bz2():
    """One object with End = Z/2 = {1, s}; strict structure, f⊗g = f·g."""
    C = validate_category(1, src=[0, 0], dst=[0, 0], identity=[0], comp=[[0, 1], [1, 0]])
    S = validate_structure(
        C,
        obj_tensor=[[0]],
        mor_tensor=[[0, 1], [1, 0]],
        assoc=np.zeros((1, 1, 1), dtype=np.int64),
    )
    u = validate_candidate(S, 0, lam=[0], rho=[0])
    return SkewMonoidal(S, u)


def discrete2():
    """Two objects, identities only, first-projection tensor: no unit exists."""
    C = validate_category(2, src=[0, 1], dst=[0, 1], identity=[0, 1], comp=[[0, -1], [-1, 1]])
    S = validate_structure(
        C,
        obj_tensor=[[0, 0], [1, 1]],
        mor_tensor=[[0, 0], [1, 1]],
        assoc=[[[0, 0], [0, 0]], [[1, 1], [1, 1]]],
    )
    return S


def sink2():
    """Second-projection tensor with one arrow 1 -> 0 into the unit object.

    hom(0, 1) is empty while object 0 still carries a unit, which is exactly
    the situation the empty unit-map enumeration needs.
    """
    C = validate_category(
        2,
        src=[0, 1, 1],
        dst=[0, 1, 0],
        identity=[0, 1],
        comp=[[0, -1, 2], [-1, 1, -1], [-1, 2, -1]],
    )
    S = validate_structure(
        C,
        obj_tensor=[[0, 1], [0, 1]],
        mor_tensor=[[0, 1, 2], [0, 1, 2], [0, 1, 2]],
        assoc=[[[0, 1], [0, 1]], [[0, 1], [0, 1]]],
    )
    u = validate_candidate(S, 0, lam=[0, 1], rho=[0, 2])
    return SkewMonoidal(S, u)


BUILTIN_STRUCTURES = {
    "terminal": terminal,
    "codisc2": codisc2,
    "bz2": bz2,
}
