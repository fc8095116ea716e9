"""Set-based independence models driven by a magma table.

For a magma M with designated element 1, the tensor X⊗Y = M×X×Y carries the
structure maps

    α : (m, (n, x, y), z) -> (m·n, x, (m, y, z))
    λ : (m, ·, x) -> x
    ρ : x -> (1, x, ·)

under which the pentagon holds iff M is associative, the mid-unit axiom iff
1 is a right identity, the right-unit axiom iff 1 is a left identity, and the
remaining two axioms hold for every table.  A second model family takes the
plain cartesian product with a two-element unit set, killing exactly the
unit-unit axiom.  Everything here evaluates those diagrams pointwise over
flattened element tuples; sets are carried as contiguous index ranges with a
decoder for readable witnesses.
"""

import itertools
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .budget import resolve_budget
from .errors import ParseError, SearchBudgetExceeded

AXIOM_ORDER = ("pentagon", "left_unit", "mid_unit", "right_unit", "unit_unit")


@dataclass(frozen=True)
class Magma:
    """A finite set with a binary table and a designated element."""

    table: np.ndarray
    designated: int

    def __post_init__(self):
        tab = np.asarray(self.table, dtype=np.int64)
        object.__setattr__(self, "table", tab)
        n = tab.shape[0]
        if tab.shape != (n, n) or n < 1:
            raise ParseError("magma table must be square and non-empty")
        if tab.min() < 0 or tab.max() >= n:
            raise ParseError("magma table entries must be elements")
        if not 0 <= self.designated < n:
            raise ParseError("designated element outside the carrier")

    @property
    def size(self):
        return int(self.table.shape[0])


@dataclass(frozen=True)
class AxiomSignature:
    """Which of the five axioms hold (True = holds)."""

    pentagon: bool
    left_unit: bool
    mid_unit: bool
    right_unit: bool
    unit_unit: bool

    def as_tuple(self):
        return (self.pentagon, self.left_unit, self.mid_unit, self.right_unit, self.unit_unit)

    @property
    def flags(self):
        return "".join("T" if b else "F" for b in self.as_tuple())

    def __str__(self):
        return "(" + ",".join(self.flags) + ")"

    @staticmethod
    def from_bits(bits):
        return AxiomSignature(*(bool(bits >> i & 1) for i in range(5)))

    @staticmethod
    def from_flags(flags):
        if len(flags) != 5 or set(flags) - {"T", "F"}:
            raise ParseError(f"bad signature flags {flags!r}")
        return AxiomSignature(*(c == "T" for c in flags))


def dual_signature(sig):
    """Tensor reversal exchanges the left and right unit axioms."""
    return AxiomSignature(
        pentagon=sig.pentagon,
        left_unit=sig.right_unit,
        mid_unit=sig.mid_unit,
        right_unit=sig.left_unit,
        unit_unit=sig.unit_unit,
    )


@dataclass(frozen=True)
class PointwiseModel:
    """A tensor model on finite sets: magma-driven or the cartesian one.

    test_sizes gives the sizes of the four free sets used to instantiate the
    diagrams (the structure maps only touch the M coordinates, so singletons
    are the default and larger sizes are a stability spot check).
    """

    kind: str  # "magma" | "cartesian_unitunit"
    magma: Magma | None = None
    test_sizes: tuple = (1, 1, 1, 1)

    def __post_init__(self):
        if self.kind not in ("magma", "cartesian_unitunit"):
            raise ParseError(f"unknown model kind {self.kind!r}")
        if self.kind == "magma" and self.magma is None:
            raise ParseError("magma model without a magma")
        if len(self.test_sizes) != 4 or any(s < 1 for s in self.test_sizes):
            raise ParseError("test_sizes must be four sizes >= 1")


# ---------------------------------------------------------------------------
# finite sets as index ranges, functions as arrays
# ---------------------------------------------------------------------------


class SetExpr:
    """A finite set with a size and an element decoder for witnesses."""

    __slots__ = ("size", "decode")

    def __init__(self, size, decode):
        self.size = int(size)
        self.decode = decode


def atom(name, size):
    if size == 1:
        return SetExpr(size, lambda i, name=name: name)
    return SetExpr(size, lambda i, name=name: (name, int(i)))


@dataclass(eq=False)
class Fn:
    dom: SetExpr
    cod: SetExpr
    arr: np.ndarray


def fn_id(A):
    return Fn(A, A, np.arange(A.size, dtype=np.int64))


def fn_compose(g, f):
    if f.cod.size != g.dom.size:
        raise ParseError("composing functions with mismatched middle set")
    return Fn(f.dom, g.cod, g.arr[f.arr])


class MagmaOps:
    """Structure maps of the magma model, on flattened index sets."""

    def __init__(self, magma):
        self.magma = magma
        self.n = magma.size
        self.unit_set = atom("I", 1)

    def ten(self, A, B):
        n = self.n

        def decode(i, A=A, B=B, n=n):
            m, rem = divmod(int(i), A.size * B.size)
            a, b = divmod(rem, B.size)
            return (m, A.decode(a), B.decode(b))

        return SetExpr(n * A.size * B.size, decode)

    def _unflatten3(self, i, A, B):
        m, rem = np.divmod(i, A.size * B.size)
        a, b = np.divmod(rem, B.size)
        return m, a, b

    def _flatten3(self, m, a, b, A, B):
        return (m * A.size + a) * B.size + b

    def alpha(self, A, B, C):
        """(m, (n, a, b), c) -> (m·n, a, (m, b, c)) elementwise."""
        AB = self.ten(A, B)
        BC = self.ten(B, C)
        dom = self.ten(AB, C)
        cod = self.ten(A, BC)
        i = np.arange(dom.size, dtype=np.int64)
        m, u, c = self._unflatten3(i, AB, C)
        n, a, b = self._unflatten3(u, A, B)
        mn = self.magma.table[m, n]
        inner = self._flatten3(m, b, c, B, C)
        arr = self._flatten3(mn, a, inner, A, BC)
        return Fn(dom, cod, arr)

    def lam(self, A):
        """(m, ·, a) -> a."""
        dom = self.ten(self.unit_set, A)
        i = np.arange(dom.size, dtype=np.int64)
        return Fn(dom, A, i % A.size)

    def rho(self, A):
        """a -> (1, a, ·)."""
        cod = self.ten(A, self.unit_set)
        i = np.arange(A.size, dtype=np.int64)
        return Fn(A, cod, self.designated * A.size + i)

    @property
    def designated(self):
        return self.magma.designated

    def fn_ten(self, f, g):
        dom = self.ten(f.dom, g.dom)
        cod = self.ten(f.cod, g.cod)
        i = np.arange(dom.size, dtype=np.int64)
        m, a, b = self._unflatten3(i, f.dom, g.dom)
        arr = self._flatten3(m, f.arr[a], g.arr[b], f.cod, g.cod)
        return Fn(dom, cod, arr)


class CartesianOps:
    """Structure maps of the cartesian model with I = {a, b}."""

    def __init__(self):
        self.unit_set = atom("I", 2)

    def ten(self, A, B):
        def decode(i, A=A, B=B):
            a, b = divmod(int(i), B.size)
            return (A.decode(a), B.decode(b))

        return SetExpr(A.size * B.size, decode)

    def alpha(self, A, B, C):
        # ((a, b), c) -> (a, (b, c)); flattening makes this the identity
        dom = self.ten(self.ten(A, B), C)
        cod = self.ten(A, self.ten(B, C))
        return Fn(dom, cod, np.arange(dom.size, dtype=np.int64))

    def lam(self, A):
        dom = self.ten(self.unit_set, A)
        i = np.arange(dom.size, dtype=np.int64)
        return Fn(dom, A, i % A.size)

    def rho(self, A):
        # x -> (x, a); the designated copy of I is its first element
        cod = self.ten(A, self.unit_set)
        i = np.arange(A.size, dtype=np.int64)
        return Fn(A, cod, i * 2)

    def fn_ten(self, f, g):
        dom = self.ten(f.dom, g.dom)
        cod = self.ten(f.cod, g.cod)
        i = np.arange(dom.size, dtype=np.int64)
        a, b = np.divmod(i, g.dom.size)
        return Fn(dom, cod, f.arr[a] * g.cod.size + g.arr[b])


def model_ops(model):
    return MagmaOps(model.magma) if model.kind == "magma" else CartesianOps()


# ---------------------------------------------------------------------------
# pointwise evaluation of the five axioms
# ---------------------------------------------------------------------------


def _axiom_legs(ops, axiom, frees):
    W, X, Y, Z = frees
    I = ops.unit_set
    if axiom == "pentagon":
        lhs = fn_compose(ops.alpha(W, X, ops.ten(Y, Z)), ops.alpha(ops.ten(W, X), Y, Z))
        rhs = fn_compose(
            ops.fn_ten(fn_id(W), ops.alpha(X, Y, Z)),
            fn_compose(ops.alpha(W, ops.ten(X, Y), Z), ops.fn_ten(ops.alpha(W, X, Y), fn_id(Z))),
        )
    elif axiom == "left_unit":
        lhs = fn_compose(ops.lam(ops.ten(X, Y)), ops.alpha(I, X, Y))
        rhs = ops.fn_ten(ops.lam(X), fn_id(Y))
    elif axiom == "mid_unit":
        lhs = fn_compose(
            ops.fn_ten(fn_id(X), ops.lam(Y)),
            fn_compose(ops.alpha(X, I, Y), ops.fn_ten(ops.rho(X), fn_id(Y))),
        )
        rhs = fn_id(ops.ten(X, Y))
    elif axiom == "right_unit":
        lhs = fn_compose(ops.alpha(X, Y, I), ops.rho(ops.ten(X, Y)))
        rhs = ops.fn_ten(fn_id(X), ops.rho(Y))
    elif axiom == "unit_unit":
        lhs = fn_compose(ops.lam(I), ops.rho(I))
        rhs = fn_id(I)
    else:
        raise ValueError(axiom)
    return lhs, rhs


def evaluate_model(model):
    """Pointwise evaluation of all five diagrams.

    Returns (AxiomSignature, witnesses) where witnesses maps each failing
    axiom to the decoded first element at which the two legs differ.
    """
    ops = model_ops(model)
    frees = tuple(atom(name, size) for name, size in zip("WXYZ", model.test_sizes))
    flags = {}
    witnesses = {}
    for axiom in AXIOM_ORDER:
        lhs, rhs = _axiom_legs(ops, axiom, frees)
        diff = np.flatnonzero(lhs.arr != rhs.arr)
        flags[axiom] = diff.size == 0
        witnesses[axiom] = None if diff.size == 0 else lhs.dom.decode(int(diff[0]))
    return AxiomSignature(**{
        "pentagon": flags["pentagon"],
        "left_unit": flags["left_unit"],
        "mid_unit": flags["mid_unit"],
        "right_unit": flags["right_unit"],
        "unit_unit": flags["unit_unit"],
    }), witnesses


# ---------------------------------------------------------------------------
# the four models of the independence proof
# ---------------------------------------------------------------------------

_LEFT_TABLE = [[0, 1, 2], [1, 0, 2], [2, 1, 0]]  # identities both sides, not associative
_MID_TABLE = [[0, 1], [0, 1]]  # associative, left identity, no right identity
_RIGHT_TABLE = [[0, 0], [1, 1]]  # associative, right identity, no left identity


def builtin_models():
    """The three magma tables plus the cartesian unit-unit model."""
    return {
        "paper-left": PointwiseModel("magma", Magma(np.array(_LEFT_TABLE), 0)),
        "paper-mid": PointwiseModel("magma", Magma(np.array(_MID_TABLE), 0)),
        "paper-right": PointwiseModel("magma", Magma(np.array(_RIGHT_TABLE), 0)),
        "paper-unitunit": PointwiseModel("cartesian_unitunit"),
    }


# ---------------------------------------------------------------------------
# census of small magmas
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CensusClass:
    signature: AxiomSignature
    count: int
    witness: Magma


@dataclass(frozen=True)
class CensusResult:
    max_size: int
    total: int
    per_size: tuple  # (size, count) pairs
    classes: tuple  # CensusClass, signatures in descending flag order


def _census_magma_count(max_size):
    return sum(n ** (n * n) * n for n in range(1, max_size + 1))


def census(max_size, budget=None, backend=None):
    """Evaluate every magma of size <= max_size under the magma model.

    Enumeration order is (size ascending, table lexicographic, designated
    ascending); the stored witness of a signature class is the first magma
    reaching it.  Raises SearchBudgetExceeded when the enumeration would be
    larger than the budget (the default admits sizes up to 3).
    """
    if max_size < 1:
        raise ParseError("census needs max_size >= 1")
    budget = resolve_budget(budget)
    total = _census_magma_count(max_size)
    if total > budget:
        raise SearchBudgetExceeded(
            f"census at max_size={max_size} needs {total} evaluations, budget is {budget}",
            partial_count=0,
        )
    counts = {}
    witnesses = {}
    per_size = []
    for n in range(1, max_size + 1):
        tables = np.array(
            list(itertools.product(range(n), repeat=n * n)), dtype=np.int64
        ).reshape(-1, n, n)
        per_size.append((n, tables.shape[0] * n))
        for d in range(n):
            sigs = kernels.magma_signatures(tables, d, backend=backend)
            values, first_idx = np.unique(sigs, return_index=True)
            for value, idx in zip(values, first_idx):
                bits = int(value)
                counts[bits] = counts.get(bits, 0) + int((sigs == value).sum())
                cand = (n, int(idx), d)  # global (size, table, designated) order
                if bits not in witnesses or cand < witnesses[bits][0]:
                    witnesses[bits] = (cand, Magma(tables[idx].copy(), d))
    classes = []
    for bits in counts:
        sig = AxiomSignature.from_bits(bits)
        classes.append(CensusClass(signature=sig, count=counts[bits], witness=witnesses[bits][1]))
    classes.sort(key=lambda c: c.signature.flags, reverse=True)
    return CensusResult(
        max_size=max_size,
        total=total,
        per_size=tuple(per_size),
        classes=tuple(classes),
    )


from .materialize import Materialization, to_finite_structure  # noqa: E402  (adapter in its own file)
