"""JSON document formats for categories, structures, functors, magmas, reports.

Ids are positional; undefined table entries are null in documents and -1 in
memory.  Structured reports carry a schema_version field and serialize with
sorted keys so repeated runs are byte-identical.
"""

import json

import numpy as np

from .errors import ParseError
from .fincat import FinFunctor, validate_category, validate_functor
from .monfun import MonoidalFunctorData
from .setmodels import Magma, PointwiseModel
from .skewstruct import validate_candidate, validate_structure

SCHEMA_VERSION = 1


def _nested(arr):
    """numpy table -> nested lists with None for the undefined sentinel."""
    if isinstance(arr, np.ndarray) and arr.ndim > 1:
        return [_nested(sub) for sub in arr]
    return [None if int(v) < 0 else int(v) for v in arr]


def _unnested(data, field):
    def conv(x):
        if isinstance(x, list):
            return [conv(v) for v in x]
        if x is None:
            return -1
        if not isinstance(x, int):
            raise ParseError(f"field {field}: expected integer or null, got {x!r}")
        return x

    if not isinstance(data, list):
        raise ParseError(f"field {field}: expected an array")
    return np.array(conv(data), dtype=np.int64)


def _require(doc, field, kind=None):
    if field not in doc:
        raise ParseError(f"missing field {field!r}")
    value = doc[field]
    if kind is not None and not isinstance(value, kind):
        raise ParseError(f"field {field!r} has wrong type")
    return value


def load_document(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise ParseError(f"cannot read {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ParseError(f"{path} is not valid JSON: line {e.lineno}: {e.msg}") from e


def dump_document(doc, path=None):
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if path is None:
        return text
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text


# ---------------------------------------------------------------------------
# categories and structures
# ---------------------------------------------------------------------------


def category_from_doc(doc):
    n = _require(doc, "objects", int)
    morphisms = _require(doc, "morphisms", list)
    identities = _require(doc, "identities", list)
    comp_triples = _require(doc, "comp", list)
    m = len(morphisms)
    src = [None] * m
    dst = [None] * m
    for i, pair in enumerate(morphisms):
        if not (isinstance(pair, list) and len(pair) == 2):
            raise ParseError(f"morphisms[{i}] must be [src, dst]")
        src[i], dst[i] = int(pair[0]), int(pair[1])
    comp = np.full((m, m), -1, dtype=np.int64)
    for i, triple in enumerate(comp_triples):
        if not (isinstance(triple, list) and len(triple) == 3):
            raise ParseError(f"comp[{i}] must be [g, f, result]")
        g, f, h = (int(v) for v in triple)
        if not (0 <= g < m and 0 <= f < m and 0 <= h < m):
            raise ParseError(f"comp[{i}] references morphism ids outside 0..{m - 1}")
        comp[g, f] = h
    return validate_category(n, src=src, dst=dst, identity=identities, comp=comp)


def category_to_doc(C):
    triples = [
        [int(g), int(f), int(C.comp[g, f])]
        for g in range(C.n_morphisms)
        for f in range(C.n_morphisms)
        if C.comp[g, f] >= 0
    ]
    return {
        "objects": C.n_objects,
        "morphisms": [[int(a), int(b)] for a, b in zip(C.src, C.dst)],
        "identities": [int(e) for e in C.identity],
        "comp": triples,
    }


def structure_from_doc(doc):
    """(TensorStructure, UnitCandidate or None) from a structure document."""
    C = category_from_doc(doc)
    S = validate_structure(
        C,
        obj_tensor=_unnested(_require(doc, "obj_tensor", list), "obj_tensor"),
        mor_tensor=_unnested(_require(doc, "mor_tensor", list), "mor_tensor"),
        assoc=_unnested(_require(doc, "assoc", list), "assoc"),
    )
    u = None
    if "unit" in doc:
        u = validate_candidate(
            S,
            _require(doc, "unit", int),
            lam=_unnested(_require(doc, "lambda", list), "lambda"),
            rho=_unnested(_require(doc, "rho", list), "rho"),
        )
    return S, u


def structure_to_doc(S, u=None):
    doc = category_to_doc(S.base)
    doc["obj_tensor"] = _nested(S.obj_tensor)
    doc["mor_tensor"] = _nested(S.mor_tensor)
    doc["assoc"] = _nested(S.assoc)
    if u is not None:
        doc["unit"] = int(u.unit_obj)
        doc["lambda"] = _nested(u.lam)
        doc["rho"] = _nested(u.rho)
    return doc


# ---------------------------------------------------------------------------
# magmas and pointwise models
# ---------------------------------------------------------------------------


def magma_from_doc(doc):
    size = _require(doc, "size", int)
    rows = _require(doc, "rows", list)
    designated = _require(doc, "designated", int)
    table = _unnested(rows, "rows")
    if table.shape != (size, size):
        raise ParseError(f"rows must form a {size}x{size} table")
    return Magma(table=table, designated=designated)


def magma_to_doc(magma):
    return {
        "size": magma.size,
        "rows": [[int(v) for v in row] for row in magma.table],
        "designated": int(magma.designated),
    }


def model_from_doc(doc, test_sizes=(1, 1, 1, 1)):
    if doc.get("kind") == "cartesian_unitunit":
        return PointwiseModel("cartesian_unitunit", test_sizes=tuple(test_sizes))
    return PointwiseModel("magma", magma_from_doc(doc), test_sizes=tuple(test_sizes))


def model_to_doc(model):
    if model.kind == "cartesian_unitunit":
        return {"kind": "cartesian_unitunit"}
    return magma_to_doc(model.magma)


# ---------------------------------------------------------------------------
# functor documents
# ---------------------------------------------------------------------------


def functor_from_doc(doc, source, target):
    """MonoidalFunctorData against already-loaded source/target structures."""
    C = source.structure.base
    D = target.structure.base
    obj_map = _unnested(_require(doc, "obj_map", list), "obj_map")
    mor_map = _unnested(_require(doc, "mor_map", list), "mor_map")
    F = validate_functor(FinFunctor(C, D, obj_map, mor_map))
    phi = _unnested(_require(doc, "phi", list), "phi")
    f0 = doc.get("f0")
    return MonoidalFunctorData(
        source=source, target=target, functor=F, phi=phi, f0=None if f0 is None else int(f0)
    )


def functor_to_doc(data):
    doc = {
        "obj_map": [int(v) for v in data.functor.obj_map],
        "mor_map": [int(v) for v in data.functor.mor_map],
        "phi": _nested(np.asarray(data.phi)),
    }
    if data.f0 is not None:
        doc["f0"] = int(data.f0)
    return doc


# ---------------------------------------------------------------------------
# report documents
# ---------------------------------------------------------------------------


def axiom_rows(report):
    return [
        {"axiom": name, "status": st.status, "witness": None if st.witness is None else [int(v) for v in st.witness]}
        for name, st in report.statuses
    ]


def census_to_doc(result):
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "census-report",
        "max_size": result.max_size,
        "total": result.total,
        "per_size": [[int(n), int(c)] for n, c in result.per_size],
        "classes": [
            {
                "signature": c.signature.flags,
                "count": int(c.count),
                "witness": magma_to_doc(c.witness),
            }
            for c in result.classes
        ],
    }


def magma_box(magma, header="."):
    """Aligned multiplication table in the boxed layout of the write-up."""
    names = [str(i) for i in range(magma.size)]
    names[magma.designated] = "1*"
    width = max(len(s) for s in names) + 1
    lines = [f"{header:>{width}} |" + "".join(f"{s:>{width}}" for s in names)]
    lines.append("-" * len(lines[0]))
    for i, row in enumerate(magma.table):
        lines.append(f"{names[i]:>{width}} |" + "".join(f"{names[int(v)]:>{width}}" for v in row))
    return "\n".join(lines)
