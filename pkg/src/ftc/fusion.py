"""Fusion rings (Grothendieck-ring data) and the group of grading functions.

A fusion ring stores the multiplicities N(i, j, k) of composition factors
of pairwise products of simples, a distinguished unit label, an optional
duality involution, and (separately) a partition of the labels into blocks.

The lambda group of a ring is the set of functions from labels into the
roots of unity of an algebraically closed field that (a) turn every nonzero
multiplicity into a multiplicative identity lambda(i)lambda(j) = lambda(k)
and (b) are constant on blocks.  It is computed by presenting those
constraints as an integer relation matrix and enumerating the characters
of the quotient group.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InfiniteGroupError
from .fields import Field
from .report import ValidationReport, Violation
from .zlattice import (
    AbelianGroupPresentation,
    IntMatrix,
    abelian_invariants,
    enumerate_characters,
    unit_character_group,
)


@dataclass
class FusionRing:
    labels: list
    unit: str
    mult: dict  # (label, label, label) -> positive int, absent = 0
    dual: dict = None  # optional involution on labels

    def __post_init__(self):
        self.index = {lab: i for i, lab in enumerate(self.labels)}

    def n(self, i, j, k) -> int:
        return self.mult.get((i, j, k), 0)

    def product_vector(self, i, j):
        """The row (N(i,j,k))_k as a dict label -> multiplicity."""
        out = {}
        for (a, b, c), m in self.mult.items():
            if a == i and b == j and m:
                out[c] = out.get(c, 0) + m
        return out

    def nonzero_triples(self):
        trips = [
            (self.index[a], self.index[b], self.index[c])
            for (a, b, c), m in self.mult.items()
            if m
        ]
        return sorted(trips)


@dataclass
class BlockPartition:
    classes: list  # list of lists of labels

    def class_of(self, label):
        for cls in self.classes:
            if label in cls:
                return cls
        raise KeyError(label)

    @staticmethod
    def singletons(labels) -> "BlockPartition":
        return BlockPartition([[lab] for lab in labels])

    def validate_against(self, labels):
        seen = []
        for cls in self.classes:
            if not cls:
                raise ValueError("empty block class")
            for lab in cls:
                if lab not in labels:
                    raise ValueError(f"block label {lab!r} not a fusion label")
                if lab in seen:
                    raise ValueError(f"label {lab!r} appears in two block classes")
                seen.append(lab)
        if len(seen) != len(labels):
            missing = [lab for lab in labels if lab not in seen]
            raise ValueError(f"blocks do not cover labels: missing {missing}")


def validate_fusion(ring: FusionRing) -> ValidationReport:
    """Check unit, associativity, and duality axioms; report every violation."""
    v = []
    labels = ring.labels
    if len(set(labels)) != len(labels):
        v.append(Violation("labels", (), "duplicate labels"))
    if ring.unit not in labels:
        v.append(Violation("unit", (ring.unit,), "unit label not among labels"))
        return ValidationReport(v)
    for key, m in sorted(ring.mult.items()):
        if any(lab not in ring.index for lab in key):
            v.append(Violation("labels", key, "multiplicity uses unknown label"))
            return ValidationReport(v)
        if not isinstance(m, int) or m < 0:
            v.append(Violation("multiplicity", key, f"bad multiplicity {m!r}"))
    one = ring.unit
    for j in labels:
        expect = {j: 1}
        got = ring.product_vector(one, j)
        if got != expect:
            v.append(Violation("unit", (one, j), f"1*{j} = {got}, expected {expect}"))
        got = ring.product_vector(j, one)
        if got != expect:
            v.append(Violation("unit", (j, one), f"{j}*1 = {got}, expected {expect}"))
    # associativity: compare (i*j)*k with i*(j*k) coefficientwise
    prods = {}
    for i in labels:
        for j in labels:
            prods[(i, j)] = ring.product_vector(i, j)
    for i in labels:
        for j in labels:
            for k in labels:
                left = {}
                for t, m in prods[(i, j)].items():
                    for l, m2 in prods[(t, k)].items():
                        left[l] = left.get(l, 0) + m * m2
                right = {}
                for t, m in prods[(j, k)].items():
                    for l, m2 in prods[(i, t)].items():
                        right[l] = right.get(l, 0) + m * m2
                if left != right:
                    v.append(
                        Violation(
                            "associativity",
                            (i, j, k),
                            f"({i}*{j})*{k} = {left} but {i}*({j}*{k}) = {right}",
                        )
                    )
    if ring.dual is not None:
        for i, istar in sorted(ring.dual.items()):
            if istar not in ring.index:
                v.append(Violation("dual", (i,), f"dual {istar!r} not a label"))
                continue
            if ring.dual.get(istar) != i:
                v.append(Violation("dual", (i,), "dual map is not an involution"))
            if ring.n(i, istar, one) < 1:
                v.append(
                    Violation(
                        "dual", (i, istar), f"N({i},{istar},{one}) = 0, expected >= 1"
                    )
                )
    return ValidationReport(v)


def lambda_relation_matrix(ring: FusionRing, blocks: BlockPartition) -> IntMatrix:
    """Integer relations satisfied by the exponents of a grading function.

    One row e_i + e_j - e_k per nonzero multiplicity triple, one row
    e_i - e_j per pair of block-equivalent labels; deduplicated, in
    sorted-triple order.
    """
    blocks.validate_against(ring.labels)
    n = len(ring.labels)
    rows = []
    seen = set()
    for (i, j, k) in ring.nonzero_triples():
        row = [0] * n
        row[i] += 1
        row[j] += 1
        row[k] -= 1
        key = tuple(row)
        if key not in seen:
            seen.add(key)
            rows.append(row)
    pair_rows = []
    for cls in blocks.classes:
        idxs = sorted(ring.index[lab] for lab in cls)
        for a in range(len(idxs)):
            for b in range(a + 1, len(idxs)):
                row = [0] * n
                row[idxs[a]] += 1
                row[idxs[b]] -= 1
                key = tuple(row)
                if key not in seen:
                    seen.add(key)
                    pair_rows.append((idxs[a], idxs[b], row))
    for _, _, row in sorted(pair_rows, key=lambda t: (t[0], t[1])):
        rows.append(row)
    if not rows:
        rows = [[0] * n]
    return IntMatrix.from_rows(rows)


@dataclass(frozen=True)
class LambdaFunction:
    """A grading function on the labels: abstract exponents and/or scalars."""

    labels: tuple
    modulus: int = 1
    exponents: tuple = None
    values: tuple = None
    field: Field = None

    def __post_init__(self):
        if self.exponents is None and self.values is None:
            raise ValueError("need exponents or values")

    @staticmethod
    def from_values(ring: FusionRing, field: Field, mapping) -> "LambdaFunction":
        vals = tuple(mapping[lab] for lab in ring.labels)
        return LambdaFunction(tuple(ring.labels), 1, None, vals, field)

    def exponent_at(self, label):
        return self.exponents[self.labels.index(label)]

    def value_at(self, label):
        return self.values[self.labels.index(label)]

    def key(self):
        if self.exponents is not None:
            return ("exp", self.modulus, self.exponents)
        return ("val", self.values)

    def normalized(self):
        """Modulus-independent form: each exponent as a fraction of a turn."""
        from fractions import Fraction

        if self.exponents is None:
            return ("val", self.values)
        return tuple(Fraction(e % self.modulus, self.modulus) for e in self.exponents)


def check_lambda(ring: FusionRing, blocks: BlockPartition, lam: LambdaFunction) -> bool:
    """Direct membership test: multiplicative on nonzero triples, constant on blocks."""
    if set(lam.labels) != set(ring.labels):
        raise ValueError("lambda does not assign a value to every label")
    if lam.exponents is not None:
        exp = {lab: lam.exponents[i] for i, lab in enumerate(lam.labels)}
        L = lam.modulus
        for (a, b, c), m in ring.mult.items():
            if m and (exp[a] + exp[b] - exp[c]) % L != 0:
                return False
        for cls in blocks.classes:
            if len({exp[lab] % L for lab in cls}) > 1:
                return False
        return True
    f = lam.field
    val = {lab: lam.values[i] for i, lab in enumerate(lam.labels)}
    for (a, b, c), m in ring.mult.items():
        if m and f.mul(val[a], val[b]) != val[c]:
            return False
    for cls in blocks.classes:
        first = val[cls[0]]
        if any(val[lab] != first for lab in cls[1:]):
            return False
    return True


def lambda_group(
    ring: FusionRing, blocks: BlockPartition, char_p: int, field: Field = None
):
    """Structure and enumeration of all grading functions.

    Returns (invariants, functions).  Raises InfiniteGroupError when the
    relation quotient has positive free rank: no finite tensor category
    over an algebraically closed field produces such fusion data, because
    the monoidal automorphism group of the identity functor is finite.
    """
    report = validate_fusion(ring)
    if not report.is_valid:
        raise ValueError(f"invalid fusion ring:\n{report}")
    rel = lambda_relation_matrix(ring, blocks)
    pres = AbelianGroupPresentation(len(ring.labels), rel)
    inv = abelian_invariants(pres)
    adjusted = unit_character_group(inv, char_p)
    if not adjusted.is_finite:
        raise InfiniteGroupError(
            "the grading-function group has free rank "
            f"{adjusted.free_rank}: this fusion data does not arise from a "
            "finite tensor category over an algebraically closed field "
            "(those have finitely many monoidal automorphisms of the identity)"
        )
    chars = enumerate_characters(pres, char_p, field)
    funcs = []
    for c in chars:
        lam = LambdaFunction(
            tuple(ring.labels), c.modulus, c.exponents, c.values, field
        )
        if not check_lambda(ring, blocks, lam):
            raise AssertionError("enumerated lambda fails the direct check")
        funcs.append(lam)
    unit_idx = ring.index[ring.unit]
    for lam in funcs:
        if lam.exponents[unit_idx] % lam.modulus != 0:
            raise AssertionError("lambda(unit) != 1")
    return adjusted, funcs
