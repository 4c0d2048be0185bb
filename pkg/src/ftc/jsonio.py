"""JSON encodings for fields, scalars, fusion rings, algebras, and Hopf data.

Field specs:   {"kind":"Q"} | {"kind":"Fp","p":7}
             | {"kind":"ext","base":{...},"min_poly":[c0,c1,...,1]}
Scalars:       rationals as "a/b" strings, prime-field elements as integers,
               extension elements as arrays of base-encoded coefficients.
Fusion rings:  {"labels":[...],"unit":"1","mult":[[i,j,k,N],...],
                "dual":[[i,i*],...]?,"blocks":[[...],...]?}
Algebras:      {"field":{...},"basis":[...],"unit":[...],
                "mult":[[i,j,[[k,"c"],...]],...]}
Hopf algebras: the algebra keys plus "comult":[[i,[[j,k,"c"],...]],...],
               "counit":[...], "antipode":[[row],...].

Emission is canonical: fixed key order, sorted sparse entries, so identical
inputs round-trip to identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .algebra import Algebra
from .fields import EXTENSION, PRIME, RATIONALS, Field
from .fusion import BlockPartition, FusionRing
from .hopf import HopfAlgebra
from .linalg import Matrix
from .repmod import RepModule


class SchemaError(ValueError):
    """Input does not match the expected JSON schema."""


# -- fields and scalars -------------------------------------------------

def field_to_json(f: Field):
    if f.kind == RATIONALS:
        return {"kind": "Q"}
    if f.kind == PRIME:
        return {"kind": "Fp", "p": f.p}
    base = f.base
    min_poly = []
    for c in f.min_poly:
        if base.kind == RATIONALS:
            if c.denominator != 1:
                raise SchemaError("extension min_poly must have integer coefficients")
            min_poly.append(int(c))
        else:
            min_poly.append(int(c))
    return {"kind": "ext", "base": field_to_json(base), "min_poly": min_poly}


def field_from_json(obj) -> Field:
    try:
        kind = obj["kind"]
    except (TypeError, KeyError):
        raise SchemaError("field spec needs a 'kind'")
    if kind == "Q":
        return Field.rationals()
    if kind == "Fp":
        return Field.prime(int(obj["p"]))
    if kind == "ext":
        base = field_from_json(obj["base"])
        return Field.extension(base, [int(c) for c in obj["min_poly"]])
    raise SchemaError(f"unknown field kind {kind!r}")


def scalar_to_json(f: Field, x):
    if f.kind == RATIONALS:
        return f"{x.numerator}/{x.denominator}"
    if f.kind == PRIME:
        return int(x)
    return [scalar_to_json(f.base, c) for c in x]


def scalar_from_json(f: Field, obj):
    if f.kind == RATIONALS:
        if isinstance(obj, str):
            if "/" in obj:
                num, den = obj.split("/", 1)
                return Fraction(int(num), int(den))
            return Fraction(int(obj))
        if isinstance(obj, int):
            return Fraction(obj)
        raise SchemaError(f"bad rational scalar {obj!r}")
    if f.kind == PRIME:
        if isinstance(obj, str):
            obj = int(obj)
        if not isinstance(obj, int):
            raise SchemaError(f"bad prime-field scalar {obj!r}")
        return obj % f.p
    if not isinstance(obj, list) or len(obj) != f.degree:
        raise SchemaError(f"bad extension scalar {obj!r}")
    return tuple(scalar_from_json(f.base, c) for c in obj)


# -- fusion rings --------------------------------------------------------

def fusion_to_json(ring: FusionRing, blocks: BlockPartition = None):
    idx = ring.index
    mult_rows = sorted(
        ([a, b, c, m] for (a, b, c), m in ring.mult.items() if m),
        key=lambda row: (idx[row[0]], idx[row[1]], idx[row[2]]),
    )
    doc = {
        "labels": list(ring.labels),
        "unit": ring.unit,
        "mult": mult_rows,
    }
    if ring.dual is not None:
        doc["dual"] = sorted(
            ([a, b] for a, b in ring.dual.items()), key=lambda p: idx[p[0]]
        )
    if blocks is not None:
        doc["blocks"] = [list(cls) for cls in blocks.classes]
    return doc


def fusion_from_json(obj):
    """Returns (FusionRing, BlockPartition); absent blocks mean singletons."""
    try:
        labels = list(obj["labels"])
        unit = obj["unit"]
        mult_rows = obj["mult"]
    except (TypeError, KeyError) as err:
        raise SchemaError(f"fusion schema: missing {err}")
    mult = {}
    for row in mult_rows:
        if len(row) != 4:
            raise SchemaError(f"fusion mult row {row!r} must be [i, j, k, N]")
        a, b, c, m = row
        if not isinstance(m, int) or m < 0:
            raise SchemaError(f"bad multiplicity {m!r}")
        if m:
            mult[(a, b, c)] = m
    dual = None
    if "dual" in obj and obj["dual"] is not None:
        dual = {}
        for pair in obj["dual"]:
            if len(pair) != 2:
                raise SchemaError("dual entries must be pairs")
            dual[pair[0]] = pair[1]
    ring = FusionRing(labels, unit, mult, dual)
    if "blocks" in obj and obj["blocks"] is not None:
        blocks = BlockPartition([list(cls) for cls in obj["blocks"]])
    else:
        blocks = BlockPartition.singletons(labels)
    blocks.validate_against(labels)
    return ring, blocks


# -- algebras and Hopf algebras -------------------------------------------

def algebra_to_json(a: Algebra):
    f = a.field
    mult_rows = []
    for (i, j) in sorted(a.mult):
        entry = sorted(a.mult[(i, j)], key=lambda t: t[0])
        mult_rows.append([i, j, [[k, scalar_to_json(f, c)] for k, c in entry]])
    return {
        "field": field_to_json(f),
        "basis": list(a.basis_names),
        "unit": [scalar_to_json(f, c) for c in a.unit],
        "mult": mult_rows,
    }


def algebra_from_json(obj) -> Algebra:
    try:
        f = field_from_json(obj["field"])
        basis = list(obj["basis"])
        unit = [scalar_from_json(f, c) for c in obj["unit"]]
        mult_rows = obj["mult"]
    except (TypeError, KeyError) as err:
        raise SchemaError(f"algebra schema: missing {err}")
    dim = len(basis)
    if len(unit) != dim:
        raise SchemaError("unit vector length != basis size")
    mult = {}
    for row in mult_rows:
        if len(row) != 3:
            raise SchemaError(f"algebra mult row {row!r} must be [i, j, entries]")
        i, j, entries = row
        if not (0 <= i < dim and 0 <= j < dim):
            raise SchemaError(f"mult row indices out of range: {row!r}")
        parsed = []
        for e in entries:
            if len(e) != 2 or not 0 <= e[0] < dim:
                raise SchemaError(f"bad mult entry {e!r}")
            parsed.append((e[0], scalar_from_json(f, e[1])))
        if parsed:
            mult[(i, j)] = parsed
    return Algebra(f, dim, basis, mult, unit)


def hopf_to_json(h: HopfAlgebra):
    a = h.alg
    f = a.field
    doc = algebra_to_json(a)
    comult_rows = []
    for i in sorted(h.comult):
        entries = sorted(h.comult[i], key=lambda t: (t[0], t[1]))
        comult_rows.append([i, [[j, k, scalar_to_json(f, c)] for j, k, c in entries]])
    doc["comult"] = comult_rows
    doc["counit"] = [scalar_to_json(f, c) for c in h.counit]
    doc["antipode"] = [
        [scalar_to_json(f, c) for c in row] for row in h.antipode.rows
    ]
    return doc


def hopf_from_json(obj) -> HopfAlgebra:
    a = algebra_from_json(obj)
    f = a.field
    try:
        comult_rows = obj["comult"]
        counit = [scalar_from_json(f, c) for c in obj["counit"]]
        antipode_rows = obj["antipode"]
    except (TypeError, KeyError) as err:
        raise SchemaError(f"hopf schema: missing {err}")
    comult = {}
    for row in comult_rows:
        if len(row) != 2:
            raise SchemaError(f"comult row {row!r} must be [i, entries]")
        i, entries = row
        parsed = []
        for e in entries:
            if len(e) != 3:
                raise SchemaError(f"bad comult entry {e!r}")
            parsed.append((e[0], e[1], scalar_from_json(f, e[2])))
        if parsed:
            comult[i] = parsed
    if len(counit) != a.dim or len(antipode_rows) != a.dim:
        raise SchemaError("counit/antipode size mismatch")
    antipode = Matrix(f, [[scalar_from_json(f, c) for c in row] for row in antipode_rows])
    return HopfAlgebra(a, comult, counit, antipode)


def module_to_json(m: RepModule):
    f = m.algebra.field
    return {
        "dim": m.dim,
        "action": [
            [[scalar_to_json(f, c) for c in row] for row in mat.rows]
            for mat in m.action
        ],
    }


def module_from_json(a: Algebra, obj) -> RepModule:
    f = a.field
    try:
        dim = int(obj["dim"])
        action_rows = obj["action"]
    except (TypeError, KeyError) as err:
        raise SchemaError(f"module schema: missing {err}")
    if len(action_rows) != a.dim:
        raise SchemaError("module needs one matrix per algebra basis element")
    action = [
        Matrix(f, [[scalar_from_json(f, c) for c in row] for row in mat])
        for mat in action_rows
    ]
    for mat in action:
        if mat.nrows != dim or mat.ncols != dim:
            raise SchemaError("action matrix has the wrong shape")
    return RepModule(a, dim, action)


# -- top-level file handling ----------------------------------------------

def detect_kind(obj) -> str:
    if not isinstance(obj, dict):
        raise SchemaError("top-level JSON must be an object")
    if "labels" in obj:
        return "fusion"
    if "comult" in obj:
        return "hopf"
    if "basis" in obj:
        return "algebra"
    raise SchemaError("cannot tell fusion from Hopf data (no known top-level keys)")


def dumps(doc) -> str:
    return json.dumps(doc, indent=2) + "\n"


def load_path(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)
