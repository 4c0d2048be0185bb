"""Dense exact linear algebra over a Field.

Matrices are stored row-major as lists of lists of canonical scalars.
Everything here is pure; no function mutates its arguments.
"""

from __future__ import annotations

from .errors import FieldMismatchError
from .fields import Field


class Matrix:
    def __init__(self, field: Field, rows):
        self.field = field
        self.rows = [list(r) for r in rows]
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("ragged rows")

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        return Matrix(
            field,
            [[field.one if i == j else field.zero for j in range(n)] for i in range(n)],
        )

    @staticmethod
    def zero(field: Field, nrows: int, ncols: int) -> "Matrix":
        return Matrix(field, [[field.zero] * ncols for _ in range(nrows)])

    @staticmethod
    def from_int_rows(field: Field, rows) -> "Matrix":
        return Matrix(field, [[field.from_int(x) for x in r] for r in rows])

    @staticmethod
    def column(field: Field, vec) -> "Matrix":
        return Matrix(field, [[x] for x in vec])

    def _check(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldMismatchError("matrices over different fields")

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __repr__(self):
        body = "; ".join(
            " ".join(self.field.to_str(x) for x in r) for r in self.rows
        )
        return f"Matrix[{self.nrows}x{self.ncols}]({body})"

    def copy(self) -> "Matrix":
        return Matrix(self.field, self.rows)

    def add(self, other: "Matrix") -> "Matrix":
        self._check(other)
        f = self.field
        return Matrix(
            f,
            [
                [f.add(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def sub(self, other: "Matrix") -> "Matrix":
        self._check(other)
        f = self.field
        return Matrix(
            f,
            [
                [f.sub(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def scale(self, c) -> "Matrix":
        f = self.field
        return Matrix(f, [[f.mul(c, a) for a in r] for r in self.rows])

    def mul(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        f = self.field
        bt = other.transpose().rows
        out = []
        for ra in self.rows:
            row = []
            for cb in bt:
                acc = f.zero
                for a, b in zip(ra, cb):
                    if not f.is_zero(a) and not f.is_zero(b):
                        acc = f.add(acc, f.mul(a, b))
                row.append(acc)
            out.append(row)
        return Matrix(f, out)

    def mul_vec(self, vec):
        f = self.field
        out = []
        for r in self.rows:
            acc = f.zero
            for a, b in zip(r, vec):
                if not f.is_zero(a) and not f.is_zero(b):
                    acc = f.add(acc, f.mul(a, b))
            out.append(acc)
        return out

    def transpose(self) -> "Matrix":
        return Matrix(self.field, [list(c) for c in zip(*self.rows)]) if self.rows else Matrix(self.field, [])

    def kron(self, other: "Matrix") -> "Matrix":
        self._check(other)
        f = self.field
        out = []
        for ra in self.rows:
            for rb in other.rows:
                out.append([f.mul(a, b) for a in ra for b in rb])
        return Matrix(f, out)

    def power(self, n: int) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("power of non-square matrix")
        result = Matrix.identity(self.field, self.nrows)
        acc = self
        while n:
            if n & 1:
                result = result.mul(acc)
            acc = acc.mul(acc)
            n >>= 1
        return result

    def trace(self):
        f = self.field
        acc = f.zero
        for i in range(self.nrows):
            acc = f.add(acc, self.rows[i][i])
        return acc

    def is_zero(self) -> bool:
        f = self.field
        return all(f.is_zero(x) for r in self.rows for x in r)

    def is_identity(self) -> bool:
        f = self.field
        if self.nrows != self.ncols:
            return False
        return all(
            self.rows[i][j] == (f.one if i == j else f.zero)
            for i in range(self.nrows)
            for j in range(self.ncols)
        )

    def col(self, j: int):
        return [r[j] for r in self.rows]

    def hstack(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix(self.field, [ra + rb for ra, rb in zip(self.rows, other.rows)])

    def vstack(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix(self.field, self.rows + other.rows)


def rref(m: Matrix):
    """Reduced row echelon form. Returns (R, pivot_columns)."""
    f = m.field
    rows = [list(r) for r in m.rows]
    pivots = []
    pr = 0
    for pc in range(m.ncols):
        pivot_row = None
        for i in range(pr, m.nrows):
            if not f.is_zero(rows[i][pc]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[pr], rows[pivot_row] = rows[pivot_row], rows[pr]
        inv = f.inv(rows[pr][pc])
        rows[pr] = [f.mul(inv, x) for x in rows[pr]]
        for i in range(m.nrows):
            if i != pr and not f.is_zero(rows[i][pc]):
                c = rows[i][pc]
                rows[i] = [f.sub(x, f.mul(c, y)) for x, y in zip(rows[i], rows[pr])]
        pivots.append(pc)
        pr += 1
        if pr == m.nrows:
            break
    return Matrix(f, rows), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel(m: Matrix) -> Matrix:
    """Basis of the right null space, as columns. Shape ncols x nullity."""
    f = m.field
    r, pivots = rref(m)
    free = [j for j in range(m.ncols) if j not in pivots]
    basis_cols = []
    for fc in free:
        v = [f.zero] * m.ncols
        v[fc] = f.one
        for i, pc in enumerate(pivots):
            v[pc] = f.neg(r.rows[i][fc])
        basis_cols.append(v)
    if not basis_cols:
        return Matrix(f, [[] for _ in range(m.ncols)])
    return Matrix(f, [list(col) for col in zip(*basis_cols)])


def solve(a: Matrix, b):
    """One solution x of a x = b (b a vector), or None if inconsistent."""
    f = a.field
    aug = Matrix(f, [row + [bv] for row, bv in zip(a.rows, b)])
    r, pivots = rref(aug)
    if a.ncols in pivots:
        return None
    x = [f.zero] * a.ncols
    for i, pc in enumerate(pivots):
        x[pc] = r.rows[i][a.ncols]
    return x


def solve_matrix(a: Matrix, b: Matrix):
    """Solve a X = b column by column, or None if any column is inconsistent."""
    cols = []
    for j in range(b.ncols):
        x = solve(a, b.col(j))
        if x is None:
            return None
        cols.append(x)
    return Matrix(a.field, [list(r) for r in zip(*cols)]) if cols else Matrix(a.field, [[] for _ in range(a.ncols)])


def inverse(m: Matrix):
    """Inverse of a square matrix, or None if singular."""
    if m.nrows != m.ncols:
        raise ValueError("inverse of non-square matrix")
    f = m.field
    aug = m.hstack(Matrix.identity(f, m.nrows))
    r, pivots = rref(aug)
    if pivots != list(range(m.nrows)):
        return None
    return Matrix(f, [row[m.nrows:] for row in r.rows])


def det(m: Matrix):
    """Determinant by fraction-free-ish Gaussian elimination (exact field ops)."""
    if m.nrows != m.ncols:
        raise ValueError("determinant of non-square matrix")
    f = m.field
    rows = [list(r) for r in m.rows]
    d = f.one
    for c in range(m.ncols):
        pivot = None
        for i in range(c, m.nrows):
            if not f.is_zero(rows[i][c]):
                pivot = i
                break
        if pivot is None:
            return f.zero
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            d = f.neg(d)
        d = f.mul(d, rows[c][c])
        inv = f.inv(rows[c][c])
        for i in range(c + 1, m.nrows):
            if f.is_zero(rows[i][c]):
                continue
            factor = f.mul(rows[i][c], inv)
            rows[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(rows[i], rows[c])]
    return d


def column_space_contains(basis: Matrix, vec) -> bool:
    """Is vec in the column space of basis?"""
    return solve(basis, vec) is not None


def extend_to_basis(basis: Matrix) -> Matrix:
    """Extend independent columns to a full basis using standard vectors.

    Returns an invertible n x n matrix whose first columns are the input.
    """
    f = basis.field
    n = basis.nrows
    cols = [basis.col(j) for j in range(basis.ncols)]
    have = len(cols)
    for j in range(n):
        if have == n:
            break
        e = [f.one if i == j else f.zero for i in range(n)]
        cand = cols + [e]
        mat = Matrix(f, [list(r) for r in zip(*cand)])
        if rank(mat) == len(cand):
            cols.append(e)
            have += 1
    if have != n:
        raise ValueError("input columns were dependent")
    return Matrix(f, [list(r) for r in zip(*cols)])
