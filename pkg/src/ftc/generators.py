"""Built-in Hopf algebra instances: group algebras, their duals, Taft algebras.

Each generator assembles structure constants and then runs the full axiom
verification; construction never returns an unverified instance.  Taft
comultiplications and antipodes are defined on the generators g and x and
extended by (anti)multiplicativity inside the tensor square, so no closed
q-binomial formula is trusted anywhere.
"""

from __future__ import annotations

from .algebra import Algebra
from .fields import Field
from .hopf import HopfAlgebra, verify_hopf, _tensor_mult
from .linalg import Matrix


# -- group tables ------------------------------------------------------

def zn_table(n: int):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def _perm_group_table(perms):
    index = {p: i for i, p in enumerate(perms)}
    table = []
    for p in perms:
        row = []
        for q in perms:
            comp = tuple(p[q[i]] for i in range(len(p)))
            row.append(index[comp])
        table.append(row)
    return table


def s3_table():
    """Symmetric group on 3 letters; identity first."""
    perms = [
        (0, 1, 2),
        (1, 2, 0),
        (2, 0, 1),
        (0, 2, 1),
        (2, 1, 0),
        (1, 0, 2),
    ]
    return _perm_group_table(perms)


def d4_table():
    """Dihedral group of order 8 as symmetries of a square (permuting corners)."""
    r = (1, 2, 3, 0)
    s = (1, 0, 3, 2)  # reflection
    perms = [(0, 1, 2, 3)]
    frontier = [(0, 1, 2, 3)]
    gens = [r, s]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                comp = tuple(p[g[i]] for i in range(4))
                if comp not in perms:
                    perms.append(comp)
                    nxt.append(comp)
        frontier = nxt
    assert len(perms) == 8
    return _perm_group_table(perms)


def q8_table():
    """Quaternion group {1, -1, i, -i, j, -j, k, -k}."""
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    idx = {n: i for i, n in enumerate(names)}

    def mul(a, b):
        sign = 1
        if a.startswith("-"):
            sign, a = -sign, a[1:]
        if b.startswith("-"):
            sign, b = -sign, b[1:]
        basic = {
            ("1", "1"): (1, "1"),
            ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
            ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
            ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
            ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
            ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j"),
        }
        s2, c = basic[(a, b)]
        sign *= s2
        return idx[c if sign == 1 else "-" + c]

    return [[mul(a, b) for b in names] for a in names]


BUILTIN_GROUPS = {
    "S3": s3_table,
    "D4": d4_table,
    "Q8": q8_table,
}


def validate_group_table(table) -> None:
    """Check that the table describes a group with identity at index 0."""
    n = len(table)
    for row in table:
        if len(row) != n or any(not isinstance(x, int) or not 0 <= x < n for x in row):
            raise ValueError("table entries must be indices into the element list")
    for i in range(n):
        if table[0][i] != i or table[i][0] != i:
            raise ValueError("element 0 is not a two-sided identity")
    for i in range(n):
        if 0 not in table[i]:
            raise ValueError(f"element {i} has no right inverse")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if table[table[i][j]][k] != table[i][table[j][k]]:
                    raise ValueError(f"table is not associative at ({i},{j},{k})")


def _group_inverse(table, i: int) -> int:
    for j in range(len(table)):
        if table[i][j] == 0 and table[j][i] == 0:
            return j
    raise ValueError(f"element {i} has no inverse")


# -- generators --------------------------------------------------------

def gen_group_algebra(table, field: Field, names=None) -> HopfAlgebra:
    """The group algebra kG: basis the group elements, Delta(g) = g (x) g."""
    validate_group_table(table)
    n = len(table)
    names = list(names) if names else [f"g{i}" for i in range(n)]
    f = field
    mult = {
        (i, j): [(table[i][j], f.one)] for i in range(n) for j in range(n)
    }
    unit = [f.one if i == 0 else f.zero for i in range(n)]
    alg = Algebra(f, n, names, mult, unit)
    comult = {i: [(i, i, f.one)] for i in range(n)}
    counit = [f.one] * n
    anti_cols = []
    for i in range(n):
        inv = _group_inverse(table, i)
        anti_cols.append([f.one if r == inv else f.zero for r in range(n)])
    antipode = Matrix(f, [[anti_cols[j][i] for j in range(n)] for i in range(n)])
    h = HopfAlgebra(alg, comult, counit, antipode)
    _certify(h, "group algebra")
    return h


def gen_dual_group_algebra(table, field: Field) -> HopfAlgebra:
    """Functions on G with pointwise product; comultiplication from the group law."""
    validate_group_table(table)
    n = len(table)
    f = field
    names = [f"e{i}" for i in range(n)]
    mult = {(i, i): [(i, f.one)] for i in range(n)}
    unit = [f.one] * n
    alg = Algebra(f, n, names, mult, unit)
    comult = {}
    for g in range(n):
        pairs = []
        for a in range(n):
            for b in range(n):
                if table[a][b] == g:
                    pairs.append((a, b, f.one))
        comult[g] = pairs
    counit = [f.one if i == 0 else f.zero for i in range(n)]
    anti_cols = []
    for i in range(n):
        inv = _group_inverse(table, i)
        anti_cols.append([f.one if r == inv else f.zero for r in range(n)])
    antipode = Matrix(f, [[anti_cols[j][i] for j in range(n)] for i in range(n)])
    h = HopfAlgebra(alg, comult, counit, antipode)
    _certify(h, "dual group algebra")
    return h


def gen_taft(n: int, q, field: Field, names=None) -> HopfAlgebra:
    """Taft algebra of dimension n^2: g^n = 1, x^n = 0, x g = q g x.

    q must be a primitive n-th root of unity in the field (verified).
    Basis is g^a x^b at index a*n + b.
    """
    if n < 2:
        raise ValueError("Taft algebras need n >= 2")
    f = field
    if f.multiplicative_order(q) != n:
        raise ValueError(
            f"q = {f.to_str(q)} is not a primitive {n}-th root of unity "
            f"(order {f.multiplicative_order(q)})"
        )
    dim = n * n

    def idx(a, b):
        return a * n + b

    if names is None:
        names = []
        for a in range(n):
            for b in range(n):
                ga = "g" if a == 1 else f"g^{a}"
                xb = "x" if b == 1 else f"x^{b}"
                if a == 0 and b == 0:
                    names.append("1")
                elif a == 0:
                    names.append(xb)
                elif b == 0:
                    names.append(ga)
                else:
                    names.append(f"{ga}*{xb}")

    mult = {}
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    if b + d >= n:
                        continue  # x^n = 0
                    coeff = f.pow(q, b * c)
                    mult.setdefault((idx(a, b), idx(c, d)), []).append(
                        (idx((a + c) % n, b + d), coeff)
                    )
    unit = [f.one if i == 0 else f.zero for i in range(dim)]
    alg = Algebra(f, dim, names, mult, unit)

    # comultiplication: Delta(g) = g (x) g, Delta(x) = 1 (x) x + x (x) g,
    # extended multiplicatively in the tensor square
    dg = {(idx(1, 0), idx(1, 0)): f.one}
    dx = {(idx(0, 0), idx(0, 1)): f.one, (idx(0, 1), idx(1, 0)): f.one}
    comult = {}
    for a in range(n):
        for b in range(n):
            acc = {(idx(0, 0), idx(0, 0)): f.one}
            for _ in range(a):
                acc = _tensor_mult(alg, acc, dg)
            for _ in range(b):
                acc = _tensor_mult(alg, acc, dx)
            comult[idx(a, b)] = [(j, k, c) for (j, k), c in sorted(acc.items())]

    counit = [f.one if b == 0 else f.zero for a in range(n) for b in range(n)]

    # antipode: S(g) = g^{n-1}, S(x) = -x g^{n-1}, extended as an antihomomorphism
    sg = [f.one if i == idx(n - 1, 0) else f.zero for i in range(dim)]
    sx_pos = alg.multiply(
        [f.one if i == idx(0, 1) else f.zero for i in range(dim)],
        [f.one if i == idx(n - 1, 0) else f.zero for i in range(dim)],
    )
    sx = [f.neg(c) for c in sx_pos]
    anti_cols = []
    for a in range(n):
        for b in range(n):
            acc = unit
            for _ in range(b):
                acc = alg.multiply(acc, sx)
            for _ in range(a):
                acc = alg.multiply(acc, sg)
            anti_cols.append(acc)
    antipode = Matrix(f, [[anti_cols[j][i] for j in range(dim)] for i in range(dim)])
    h = HopfAlgebra(alg, comult, counit, antipode)
    _certify(h, f"Taft algebra T_{n}")
    return h


def gen_sweedler(field: Field) -> HopfAlgebra:
    """The 4-dimensional Hopf algebra: the Taft algebra at n = 2, q = -1."""
    if field.characteristic == 2:
        raise ValueError("the Sweedler algebra needs characteristic != 2")
    q = field.neg(field.one)
    return gen_taft(2, q, field, names=["1", "x", "g", "gx"])


def _certify(h: HopfAlgebra, what: str):
    report = verify_hopf(h)
    if not report.is_valid:
        raise ValueError(f"generated {what} failed verification:\n{report}")
