"""Integer matrix normal forms and characters of finitely presented abelian groups.

The Smith normal form here uses minimal-absolute-value pivoting with plain
Python integers, so there is no overflow to manage.  Character groups
Hom(A, k^x) are represented abstractly by exponent vectors against the lcm
of the (characteristic-adjusted) invariant factors; evaluation into a
concrete field is optional and deferred.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import InfiniteGroupError
from .fields import Field
from .linalg import Matrix, det


@dataclass
class IntMatrix:
    rows: int
    cols: int
    data: list

    @staticmethod
    def from_rows(rows_data) -> "IntMatrix":
        rows_data = [list(r) for r in rows_data]
        nrows = len(rows_data)
        ncols = len(rows_data[0]) if rows_data else 0
        for r in rows_data:
            if len(r) != ncols:
                raise ValueError("ragged rows")
        return IntMatrix(nrows, ncols, rows_data)

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(nrows: int, ncols: int) -> "IntMatrix":
        return IntMatrix(nrows, ncols, [[0] * ncols for _ in range(nrows)])

    def copy(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, [list(r) for r in self.data])

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = [[0] * other.cols for _ in range(self.rows)]
        for i in range(self.rows):
            ri = self.data[i]
            for k in range(self.cols):
                a = ri[k]
                if a == 0:
                    continue
                rk = other.data[k]
                oi = out[i]
                for j in range(other.cols):
                    oi[j] += a * rk[j]
        return IntMatrix(self.rows, other.cols, out)

    def __eq__(self, other):
        return (
            isinstance(other, IntMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )


def _int_det_pm1(m: IntMatrix) -> bool:
    q = Field.rationals()
    d = det(Matrix(q, [[Fraction(x) for x in r] for r in m.data]))
    return d in (Fraction(1), Fraction(-1))


def snf(m: IntMatrix):
    """Smith normal form.  Returns (U, D, V) with U*m*V = D.

    U and V are unimodular, D is diagonal with d1 | d2 | ...; all three
    claims are re-verified before returning.
    """
    a = m.copy()
    u = IntMatrix.identity(m.rows)
    v = IntMatrix.identity(m.cols)

    def swap_rows(i, j):
        a.data[i], a.data[j] = a.data[j], a.data[i]
        u.data[i], u.data[j] = u.data[j], u.data[i]

    def swap_cols(i, j):
        for r in a.data:
            r[i], r[j] = r[j], r[i]
        for r in v.data:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, c):
        # row dst += c * row src
        a.data[dst] = [x + c * y for x, y in zip(a.data[dst], a.data[src])]
        u.data[dst] = [x + c * y for x, y in zip(u.data[dst], u.data[src])]

    def add_col(src, dst, c):
        for r in a.data:
            r[dst] += c * r[src]
        for r in v.data:
            r[dst] += c * r[src]

    def negate_row(i):
        a.data[i] = [-x for x in a.data[i]]
        u.data[i] = [-x for x in u.data[i]]

    n = min(m.rows, m.cols)
    for k in range(n):
        while True:
            # locate minimal-absolute-value nonzero entry in the submatrix
            best = None
            for i in range(k, m.rows):
                for j in range(k, m.cols):
                    x = a.data[i][j]
                    if x != 0 and (best is None or abs(x) < abs(best[2])):
                        best = (i, j, x)
            if best is None:
                break
            bi, bj, _ = best
            if bi != k:
                swap_rows(k, bi)
            if bj != k:
                swap_cols(k, bj)
            pivot = a.data[k][k]
            dirty = False
            for i in range(k + 1, m.rows):
                if a.data[i][k] != 0:
                    q = a.data[i][k] // pivot
                    if q:
                        add_row(k, i, -q)
                    if a.data[i][k] != 0:
                        dirty = True
            for j in range(k + 1, m.cols):
                if a.data[k][j] != 0:
                    q = a.data[k][j] // pivot
                    if q:
                        add_col(k, j, -q)
                    if a.data[k][j] != 0:
                        dirty = True
            if dirty:
                continue
            # pivot must divide every remaining entry for the chain d1 | d2 | ...
            offender = None
            for i in range(k + 1, m.rows):
                for j in range(k + 1, m.cols):
                    if a.data[i][j] % pivot != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, k, 1)
        if a.data[k][k] < 0:
            negate_row(k)

    d = IntMatrix.zero(m.rows, m.cols)
    for k in range(n):
        d.data[k][k] = a.data[k][k]
    # postcondition checks
    if u.mul(m).mul(v) != d:
        raise AssertionError("SNF verification failed: U*M*V != D")
    if not _int_det_pm1(u) or not _int_det_pm1(v):
        raise AssertionError("SNF verification failed: transform not unimodular")
    diag = [d.data[i][i] for i in range(n)]
    for x, y in zip(diag, diag[1:]):
        if x == 0 and y != 0:
            raise AssertionError("SNF verification failed: zero before nonzero")
        if x != 0 and y % x != 0:
            raise AssertionError("SNF verification failed: divisibility chain broken")
    return u, d, v


@dataclass
class AbelianGroupPresentation:
    """Z^generator_count modulo the subgroup spanned by the relation rows."""

    generator_count: int
    relations: IntMatrix

    def __post_init__(self):
        if self.relations.cols != self.generator_count:
            raise ValueError("relation width does not match generator count")


@dataclass
class AbelianInvariants:
    """free_rank copies of Z plus cyclic factors of the listed orders."""

    free_rank: int
    torsion: list

    def __post_init__(self):
        for x, y in zip(self.torsion, self.torsion[1:]):
            if y % x != 0:
                raise ValueError("invariant factors must form a divisibility chain")
        if any(t < 2 for t in self.torsion):
            raise ValueError("torsion entries must be >= 2")

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self):
        if not self.is_finite:
            return None
        n = 1
        for t in self.torsion:
            n *= t
        return n

    def describe(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{t}" for t in self.torsion]
        return " x ".join(parts) if parts else "trivial"


def abelian_invariants(pres: AbelianGroupPresentation) -> AbelianInvariants:
    _, d, _ = snf(pres.relations)
    n = min(pres.relations.rows, pres.relations.cols)
    diag = [d.data[i][i] for i in range(n)]
    rank = sum(1 for x in diag if x != 0)
    torsion = [x for x in diag if x >= 2]
    return AbelianInvariants(pres.generator_count - rank, torsion)


def _prime_to_p_part(n: int, p: int) -> int:
    while n % p == 0:
        n //= p
    return n


def unit_character_group(inv: AbelianInvariants, char_p: int) -> AbelianInvariants:
    """Invariants of Hom(A, k^x) for k algebraically closed of the given characteristic.

    In characteristic p the unit group has no p-torsion, so each invariant
    factor is replaced by its prime-to-p part.  Positive free rank means the
    character group is infinite (is_finite on the result is False).
    """
    if char_p:
        torsion = [_prime_to_p_part(t, char_p) for t in inv.torsion]
    else:
        torsion = list(inv.torsion)
    torsion = [t for t in torsion if t >= 2]
    return AbelianInvariants(inv.free_rank, torsion)


@dataclass(frozen=True)
class UnitCharacter:
    """A character into roots of unity, one exponent mod `modulus` per generator."""

    modulus: int
    exponents: tuple
    values: tuple = None
    field: Field = dc_field(default=None, compare=False)

    def value_exponent(self, i: int) -> int:
        return self.exponents[i]

    def mul(self, other: "UnitCharacter") -> "UnitCharacter":
        if self.modulus != other.modulus:
            raise ValueError("character moduli differ")
        exps = tuple(
            (a + b) % self.modulus for a, b in zip(self.exponents, other.exponents)
        )
        vals = None
        if self.values is not None and other.values is not None:
            vals = tuple(self.field.mul(a, b) for a, b in zip(self.values, other.values))
        return UnitCharacter(self.modulus, exps, vals, self.field)

    def inverse(self) -> "UnitCharacter":
        exps = tuple((-a) % self.modulus for a in self.exponents)
        vals = None
        if self.values is not None:
            vals = tuple(self.field.inv(a) for a in self.values)
        return UnitCharacter(self.modulus, exps, vals, self.field)

    def is_trivial(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def annihilates(self, row) -> bool:
        return sum(c * e for c, e in zip(row, self.exponents)) % self.modulus == 0


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a * b // gcd(a, b) if a and b else 0


def enumerate_characters(
    pres: AbelianGroupPresentation, char_p: int, field: Field = None
):
    """All characters of Z^n/relations into the units of an algebraically
    closed field of characteristic char_p, in lexicographic exponent order.

    When a concrete field is supplied each character also carries evaluated
    scalar values; the field must contain the required roots of unity.
    """
    inv = abelian_invariants(pres)
    adjusted = unit_character_group(inv, char_p)
    if not adjusted.is_finite:
        raise InfiniteGroupError(
            f"character group is infinite (free rank {adjusted.free_rank})"
        )
    _, d, v = snf(pres.relations)
    n = pres.generator_count
    k = min(pres.relations.rows, n)
    orders = []
    for j in range(n):
        dj = d.data[j][j] if j < k else 0
        if dj == 0:
            dj = 1  # unreachable for finite groups; kept for safety
        orders.append(_prime_to_p_part(dj, char_p) if char_p else dj)
    modulus = 1
    for o in orders:
        modulus = _lcm(modulus, o)

    zeta = None
    if field is not None and modulus >= 1:
        zeta = field.root_of_unity(modulus)

    chars = []
    total = 1
    for o in orders:
        total *= o

    counters = [0] * n
    for _ in range(total):
        # exponent of old generator i: sum_j c_j * (L/d_j) * V[i][j] mod L
        exps = []
        for i in range(n):
            e = 0
            for j in range(n):
                if orders[j] == 1:
                    continue
                e += counters[j] * (modulus // orders[j]) * v.data[i][j]
            exps.append(e % modulus)
        vals = None
        if zeta is not None:
            vals = tuple(field.pow(zeta, e) for e in exps)
        chars.append(UnitCharacter(modulus, tuple(exps), vals, field))
        # increment mixed-radix counter
        pos = n - 1
        while pos >= 0:
            counters[pos] += 1
            if counters[pos] < orders[pos]:
                break
            counters[pos] = 0
            pos -= 1

    # dedupe (distinct counter tuples give distinct characters, but be safe)
    seen = set()
    unique = []
    for c in chars:
        if c.exponents not in seen:
            seen.add(c.exponents)
            unique.append(c)
    if len(unique) != (adjusted.order or 0) and n > 0:
        raise AssertionError(
            f"character count {len(unique)} != group order {adjusted.order}"
        )
    for c in unique:
        for row in pres.relations.data:
            if not c.annihilates(row):
                raise AssertionError("character fails a defining relation")
    unique.sort(key=lambda c: c.exponents)
    return unique


def presentation_from_table(table, kill=()) -> AbelianGroupPresentation:
    """Present a finite abelian group given by a multiplication table.

    Generators are the elements; each table cell (a, b) -> ab contributes a
    relation e_a + e_b - e_ab.  Indices in `kill` add relations e_k = 0,
    presenting the quotient by the subgroup those elements generate.
    """
    n = len(table)
    rows = []
    for x in range(n):
        for y in range(n):
            row = [0] * n
            row[x] += 1
            row[y] += 1
            row[table[x][y]] -= 1
            rows.append(row)
    for k in kill:
        row = [0] * n
        row[k] = 1
        rows.append(row)
    return AbelianGroupPresentation(n, IntMatrix.from_rows(rows))
