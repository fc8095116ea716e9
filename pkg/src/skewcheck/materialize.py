"""Materialize a pointwise Set-model as a finite category.

No finite family of nonempty sets is closed under X⊗Y = M×X×Y (sizes
multiply), so the materialized category carries a deliberately partial
tensor: objects are the tensor words over {I, V} up to depth two, plus the
fourfold words needed to evaluate the pentagon at the free generators, all
pruned by a size bound.  Morphisms are the structure maps as honest
functions between the flattened carriers, closed under composition and
under tensoring wherever the tensor of the endpoint pairs exists.  Every
defined diagram instance is therefore a genuine Set diagram of the model,
so the axiom checker sees exactly the model's signature: passing axioms
stay passing (restriction of true statements), and each failing axiom is
witnessed at a base tuple kept inside the bound.
"""

from dataclasses import dataclass

import numpy as np

from .errors import CapExceeded
from .fincat import MAX_MORPHISMS, MAX_OBJECTS, validate_category
from .setmodels import Fn, atom, fn_id, model_ops
from .skewstruct import TensorStructure, UnitCandidate, validate_candidate, validate_structure


def _word_name(word):
    if word[0] != "ten":
        return word[0] if word[0] == "I" else f"V{word[1]}"
    return f"({_word_name(word[1])}⊗{_word_name(word[2])})"


@dataclass(eq=False)
class Materialization:
    structure: TensorStructure
    unit: UnitCandidate
    object_words: tuple  # word tuples, index = object id
    generator_ids: tuple  # ids of the seeded structure morphisms

    @property
    def object_names(self):
        return tuple(_word_name(w) for w in self.object_words)


def _pentagon_words(g):
    v = g
    vv = ("ten", v, v)
    return [
        ("ten", ("ten", vv, v), v),  # ((V⊗V)⊗V)⊗V
        ("ten", ("ten", v, vv), v),  # (V⊗(V⊗V))⊗V
        ("ten", v, ("ten", vv, v)),  # V⊗((V⊗V)⊗V)
        ("ten", v, ("ten", v, vv)),  # V⊗(V⊗(V⊗V))
    ]


def to_finite_structure(model, size_bound=81):
    """Bounded materialization; returns the structure with the model's unit.

    The unit candidate is the model's own (I, λ, ρ) restricted to the words
    kept under the bound.  Raises CapExceeded when the word set or the
    generated morphism set would exceed the category caps.
    """
    ops = model_ops(model)
    sizes = []
    for s in model.test_sizes:
        if s not in sizes:
            sizes.append(s)
    gen_words = [("I",)] + [("V", s) for s in sorted(sizes)]

    exprs = {("I",): ops.unit_set}
    for s in sorted(sizes):
        exprs[("V", s)] = atom(f"V{s}", s)

    def expr_of(word):
        if word in exprs:
            return exprs[word]
        exprs[word] = ops.ten(expr_of(word[1]), expr_of(word[2]))
        return exprs[word]

    words = list(gen_words)
    seen = set(words)

    def try_add(word):
        if word in seen:
            return
        if expr_of(word).size <= size_bound:
            words.append(word)
            seen.add(word)

    level0 = list(gen_words)
    for a in level0:
        for b in level0:
            try_add(("ten", a, b))
    level01 = list(words)
    for a in level01:
        for b in level01:
            if a in gen_words and b in gen_words:
                continue
            try_add(("ten", a, b))
    for g in gen_words[1:]:  # pentagon words at each free generator
        for w in _pentagon_words(g):
            if all(sub in seen for sub in (w[1], w[2])):
                try_add(w)
    if len(words) > MAX_OBJECTS:
        raise CapExceeded(f"materialization needs {len(words)} objects (cap {MAX_OBJECTS})")

    obj_id = {w: i for i, w in enumerate(words)}
    n = len(words)
    obj_tensor = np.full((n, n), -1, dtype=np.int64)
    for a in words:
        for b in words:
            t = ("ten", a, b)
            if t in obj_id:
                obj_tensor[obj_id[a], obj_id[b]] = obj_id[t]

    # morphism store keyed by (src, dst, function graph)
    mor_key = {}
    mors = []  # (src_id, dst_id, Fn)

    def add_mor(src, dst, fn):
        key = (src, dst, fn.arr.tobytes())
        if key in mor_key:
            return mor_key[key], False
        idx = len(mors)
        if idx >= MAX_MORPHISMS:
            raise CapExceeded(f"materialization exceeds {MAX_MORPHISMS} morphisms")
        mor_key[key] = idx
        mors.append((src, dst, fn))
        return idx, True

    identity = np.empty(n, dtype=np.int64)
    for w in words:
        i = obj_id[w]
        identity[i], _ = add_mor(i, i, fn_id(expr_of(w)))

    generator_ids = []
    unit_word = ("I",)
    I = obj_id[unit_word]
    lam = np.full(n, -1, dtype=np.int64)
    rho = np.full(n, -1, dtype=np.int64)
    for w in words:
        x = obj_id[w]
        if obj_tensor[I, x] >= 0:
            idx, _ = add_mor(int(obj_tensor[I, x]), x, ops.lam(expr_of(w)))
            lam[x] = idx
            generator_ids.append(idx)
        if obj_tensor[x, I] >= 0:
            idx, _ = add_mor(x, int(obj_tensor[x, I]), ops.rho(expr_of(w)))
            rho[x] = idx
            generator_ids.append(idx)
    assoc = np.full((n, n, n), -1, dtype=np.int64)
    for a in words:
        for b in words:
            ab = ("ten", a, b)
            if ab not in obj_id:
                continue
            for c in words:
                left = ("ten", ab, c)
                bc = ("ten", b, c)
                right = ("ten", a, bc) if bc in obj_id else None
                if left in obj_id and right in obj_id:
                    fn = ops.alpha(expr_of(a), expr_of(b), expr_of(c))
                    idx, _ = add_mor(obj_id[left], obj_id[right], fn)
                    assoc[obj_id[a], obj_id[b], obj_id[c]] = idx
                    generator_ids.append(idx)

    # close under composition and under tensoring along defined pairs; each
    # ordered pair is handled exactly once, when its later member arrives,
    # and the resulting table entries are recorded as we go.  Buckets by
    # endpoint/type keep the scans proportional to actual composable or
    # tensorable pairs.
    comp_entries = {}
    ten_entries = {}
    T = obj_tensor.tolist()
    by_src = {}
    by_dst = {}
    by_type = {}

    k = 0
    while k < len(mors):
        s, d, fn = mors[k]
        by_src.setdefault(s, []).append(k)
        by_dst.setdefault(d, []).append(k)
        by_type.setdefault((s, d), []).append(k)
        for f in by_dst.get(s, ()):  # k after f, including f == k when s == d
            sf, _, ff = mors[f]
            idx, _ = add_mor(sf, d, Fn(ff.dom, fn.cod, fn.arr[ff.arr]))
            comp_entries[(k, f)] = idx
        for g in by_src.get(d, ()):  # g after k
            if g == k:
                continue
            _, dg, fg = mors[g]
            idx, _ = add_mor(s, dg, Fn(fn.dom, fg.cod, fg.arr[fn.arr]))
            comp_entries[(g, k)] = idx
        for (c, e), ids2 in list(by_type.items()):
            if T[s][c] >= 0 and T[d][e] >= 0:
                for j in ids2:  # k ⊗ j, including j == k
                    _, _, fj = mors[j]
                    idx, _ = add_mor(T[s][c], T[d][e], ops.fn_ten(fn, fj))
                    ten_entries[(k, j)] = idx
            if T[c][s] >= 0 and T[e][d] >= 0:
                for j in ids2:  # j ⊗ k
                    if j == k:
                        continue
                    _, _, fj = mors[j]
                    idx, _ = add_mor(T[c][s], T[e][d], ops.fn_ten(fj, fn))
                    ten_entries[(j, k)] = idx
        k += 1

    m = len(mors)
    src = np.array([s for s, _, _ in mors], dtype=np.int64)
    dst = np.array([d for _, d, _ in mors], dtype=np.int64)
    comp = np.full((m, m), -1, dtype=np.int64)
    mor_tensor = np.full((m, m), -1, dtype=np.int64)
    for (g, f), idx in comp_entries.items():
        comp[g, f] = idx
    for (g, f), idx in ten_entries.items():
        mor_tensor[g, f] = idx

    gen_ids = tuple(sorted(set(generator_ids) | set(int(i) for i in identity)))
    C = validate_category(n, src=src, dst=dst, identity=identity, comp=comp)
    # associator naturality over generating morphisms; the defined fragment
    # consists of genuine Set functions, for which naturality is inherited
    S = validate_structure(C, obj_tensor=obj_tensor, mor_tensor=mor_tensor, assoc=assoc, generators=gen_ids)
    u = validate_candidate(S, I, lam=lam, rho=rho)
    return Materialization(
        structure=S,
        unit=u,
        object_words=tuple(words),
        generator_ids=tuple(sorted(set(generator_ids))),
    )
