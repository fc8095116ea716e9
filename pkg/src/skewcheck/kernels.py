"""Hot inner loops: pentagon scans and magma-model signature evaluation.

Each kernel exists twice with an identical contract: a numba ``@njit``
version and a pure-numpy version.  Selection is per call via the ``backend``
argument or the ``SKEWCHECK_BACKEND`` environment variable (``auto`` |
``numba`` | ``numpy``; ``auto`` prefers numba when it imports).
"""

import os

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        return wrap


def resolve_backend(override=None):
    choice = override or os.environ.get("SKEWCHECK_BACKEND", "auto")
    if choice not in ("auto", "numba", "numpy"):
        raise ValueError(f"unknown backend {choice!r}")
    if choice == "auto":
        return "numba" if HAVE_NUMBA else "numpy"
    if choice == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba backend requested but numba is not importable")
    return choice


# ---------------------------------------------------------------------------
# Pentagon scan over all object quadruples of a tensor structure.
#
# Both composites from ((W⊗X)⊗Y)⊗Z to W⊗(X⊗(Y⊗Z)) are assembled morphism by
# morphism; quadruples touching an undefined table entry (-1) are skipped.
# Scan order is lexicographic so the first witness is deterministic.
# ---------------------------------------------------------------------------


@njit(cache=True)
def _pentagon_scan_numba(obj_tensor, mor_tensor, assoc, comp, ident):
    n = obj_tensor.shape[0]
    for w in range(n):
        for x in range(n):
            twx = obj_tensor[w, x]
            for y in range(n):
                txy = obj_tensor[x, y]
                for z in range(n):
                    tyz = obj_tensor[y, z]
                    if twx < 0 or txy < 0 or tyz < 0:
                        continue
                    a_top1 = assoc[twx, y, z]
                    a_top2 = assoc[w, x, tyz]
                    a_wxy = assoc[w, x, y]
                    a_mid = assoc[w, txy, z]
                    a_xyz = assoc[x, y, z]
                    if a_top1 < 0 or a_top2 < 0 or a_wxy < 0 or a_mid < 0 or a_xyz < 0:
                        continue
                    leg_top = comp[a_top2, a_top1]
                    m_left = mor_tensor[a_wxy, ident[z]]
                    m_right = mor_tensor[ident[w], a_xyz]
                    if leg_top < 0 or m_left < 0 or m_right < 0:
                        continue
                    half = comp[a_mid, m_left]
                    if half < 0:
                        continue
                    leg_bot = comp[m_right, half]
                    if leg_bot < 0:
                        continue
                    if leg_top != leg_bot:
                        return 1, w, x, y, z
    return 0, -1, -1, -1, -1


def _pentagon_scan_numpy(obj_tensor, mor_tensor, assoc, comp, ident):
    from .fincat import gather

    n = obj_tensor.shape[0]
    xs, ys, zs = np.meshgrid(np.arange(n), np.arange(n), np.arange(n), indexing="ij")
    for w in range(n):
        ws = np.full_like(xs, w)
        twx = gather(obj_tensor, ws, xs)
        txy = gather(obj_tensor, xs, ys)
        tyz = gather(obj_tensor, ys, zs)
        a_top1 = gather(assoc, twx, ys, zs)
        a_top2 = gather(assoc, ws, xs, tyz)
        leg_top = gather(comp, a_top2, a_top1)
        m_left = gather(mor_tensor, gather(assoc, ws, xs, ys), ident[zs])
        m_right = gather(mor_tensor, ident[ws], gather(assoc, xs, ys, zs))
        leg_bot = gather(comp, m_right, gather(comp, gather(assoc, ws, txy, zs), m_left))
        bad = (leg_top >= 0) & (leg_bot >= 0) & (leg_top != leg_bot)
        if bad.any():
            x, y, z = (int(v) for v in np.argwhere(bad)[0])
            return 1, w, x, y, z
    return 0, -1, -1, -1, -1


def pentagon_scan(obj_tensor, mor_tensor, assoc, comp, ident, backend=None):
    """(found, w, x, y, z) for the first pentagon violation in lex order."""
    args = tuple(np.ascontiguousarray(np.asarray(a, dtype=np.int64)) for a in (obj_tensor, mor_tensor, assoc, comp, ident))
    if resolve_backend(backend) == "numba":
        return _pentagon_scan_numba(*args)
    return _pentagon_scan_numpy(*args)


# ---------------------------------------------------------------------------
# Signature evaluation for the magma-driven Set models at singleton sizes.
#
# With every free set a singleton, the flattened element tuples keep only the
# M coordinates: the fourfold tensor is M^3, the unit-axiom sources are M^2
# or M.  Walking the displayed composites coordinate by coordinate gives
#
#   pentagon legs at (m, n, p):  ((m·n)·p, m·n, m)  vs  (m·(n·p), m·n, m)
#   left-unit legs at (m, n):    both send (m, n) to m, identically
#   mid-unit leg at m:           m -> (m, d) -> (m·d, m) -> m·d,  vs  m
#   right-unit legs at m:        (d·m, d)  vs  (m, d)
#   unit-unit leg:               an endomap of a one-point set, forced to id
#
# so only the pentagon and mid/right walks need table lookups; the left and
# unit-unit legs agree before any table entry is consulted.  The reduced
# conditions (plain associativity/identity statements) live in the test
# oracle, not here.
#
# Bit layout of a signature: bit 0 pentagon, 1 left, 2 mid, 3 right,
# 4 unit-unit; a set bit means the axiom holds.
# ---------------------------------------------------------------------------


@njit(cache=True)
def _magma_signatures_numba(tables, d):
    count, n, _ = tables.shape
    out = np.empty(count, dtype=np.uint8)
    for t in range(count):
        tab = tables[t]
        bits = 2 | 16  # left and unit-unit legs agree identically
        pentagon = True
        for m in range(n):
            for k in range(n):
                mk = tab[m, k]
                for p in range(n):
                    if tab[mk, p] != tab[m, tab[k, p]]:
                        pentagon = False
                        break
                if not pentagon:
                    break
            if not pentagon:
                break
        mid = True
        for m in range(n):
            if tab[m, d] != m:
                mid = False
                break
        right = True
        for m in range(n):
            if tab[d, m] != m:
                right = False
                break
        if pentagon:
            bits |= 1
        if mid:
            bits |= 4
        if right:
            bits |= 8
        out[t] = bits
    return out


def _magma_signatures_numpy(tables, d):
    count, n, _ = tables.shape
    flat = tables.reshape(count, n * n)
    rows = np.arange(count)
    pent = np.ones(count, dtype=bool)
    for m in range(n):
        for k in range(n):
            mk = flat[:, m * n + k]
            for p in range(n):
                pent &= flat[rows, mk * n + p] == flat[rows, m * n + flat[:, k * n + p]]
    mid = np.ones(count, dtype=bool)
    right = np.ones(count, dtype=bool)
    for m in range(n):
        mid &= flat[:, m * n + d] == m
        right &= flat[:, d * n + m] == m
    out = np.full(count, 2 | 16, dtype=np.uint8)
    return (
        out
        | pent.astype(np.uint8)
        | (mid.astype(np.uint8) << 2)
        | (right.astype(np.uint8) << 3)
    )


def magma_signatures(tables, d, backend=None):
    """Per-table axiom bitmasks for the magma model with designated element d."""
    tables = np.ascontiguousarray(np.asarray(tables, dtype=np.int64))
    if resolve_backend(backend) == "numba":
        return _magma_signatures_numba(tables, int(d))
    return _magma_signatures_numpy(tables, int(d))
