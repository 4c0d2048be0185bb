"""Finite-dimensional associative algebras given by structure constants.

Provides axiom verification, center, Jacobson radical with certification,
quotients by two-sided ideals, Newton lifting of idempotents, and the
complete character list of a commutative algebra (the engine behind
grouplike computations).

The radical is computed from the trace form in characteristic zero.  Over
finite fields it is the intersection of the annihilators of the
composition factors of the regular module; the result is certified by
checking it is a nilpotent two-sided ideal whose quotient acts faithfully
on a semisimple module.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RadicalUncertifiedError, SplittingError
from .fields import Field
from .linalg import (
    Matrix,
    extend_to_basis,
    inverse,
    kernel,
    rank,
    rref,
    solve,
)
from .poly import Poly, factor, min_poly_of_matrix
from .report import ValidationReport, Violation


@dataclass
class Algebra:
    field: Field
    dim: int
    basis_names: list
    mult: dict  # (i, j) -> list of (k, scalar); absent pairs multiply to zero
    unit: list  # coefficient vector of the identity

    def __post_init__(self):
        if len(self.basis_names) != self.dim or len(self.unit) != self.dim:
            raise ValueError("dimension mismatch in algebra data")

    def basis_vector(self, i: int):
        f = self.field
        return [f.one if j == i else f.zero for j in range(self.dim)]

    def basis_product(self, i: int, j: int):
        return self.mult.get((i, j), [])

    def multiply(self, x, y):
        f = self.field
        out = [f.zero] * self.dim
        for i, xi in enumerate(x):
            if f.is_zero(xi):
                continue
            for j, yj in enumerate(y):
                if f.is_zero(yj):
                    continue
                c = f.mul(xi, yj)
                for k, s in self.basis_product(i, j):
                    out[k] = f.add(out[k], f.mul(c, s))
        return out

    def left_mult_matrix(self, x) -> Matrix:
        cols = [self.multiply(x, self.basis_vector(j)) for j in range(self.dim)]
        return Matrix(self.field, [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)])

    def right_mult_matrix(self, x) -> Matrix:
        cols = [self.multiply(self.basis_vector(j), x) for j in range(self.dim)]
        return Matrix(self.field, [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)])

    def is_commutative(self) -> bool:
        for i in range(self.dim):
            bi = self.basis_vector(i)
            for j in range(i + 1, self.dim):
                bj = self.basis_vector(j)
                if self.multiply(bi, bj) != self.multiply(bj, bi):
                    return False
        return True

    def element_min_poly(self, x) -> Poly:
        return min_poly_of_matrix(self.left_mult_matrix(x))

    def to_str(self, x) -> str:
        f = self.field
        terms = []
        for i, c in enumerate(x):
            if f.is_zero(c):
                continue
            cs = f.to_str(c)
            name = self.basis_names[i]
            terms.append(name if cs == "1" else f"{cs}*{name}")
        return " + ".join(terms) if terms else "0"


@dataclass
class Subspace:
    ambient_dim: int
    basis: Matrix  # columns are the basis vectors

    def __post_init__(self):
        if self.basis.nrows != self.ambient_dim:
            raise ValueError("basis height does not match ambient dimension")
        if self.basis.ncols and rank(self.basis) != self.basis.ncols:
            raise ValueError("basis columns are dependent")

    @property
    def dim(self) -> int:
        return self.basis.ncols

    def contains(self, vec) -> bool:
        if self.dim == 0:
            f = self.basis.field
            return all(f.is_zero(x) for x in vec)
        return solve(self.basis, vec) is not None

    def vectors(self):
        return [self.basis.col(j) for j in range(self.dim)]


@dataclass(frozen=True)
class AlgebraCharacter:
    """A one-dimensional representation: chi(b_i) per basis element."""

    values: tuple
    field: Field

    def apply(self, vec):
        f = self.field
        acc = f.zero
        for v, c in zip(self.values, vec):
            acc = f.add(acc, f.mul(v, c))
        return acc


def verify_algebra(a: Algebra) -> ValidationReport:
    """Exhaustive associativity and unit checks on basis elements."""
    v = []
    f = a.field
    one = a.unit
    for i in range(a.dim):
        bi = a.basis_vector(i)
        if a.multiply(one, bi) != bi:
            v.append(Violation("unit", (i,), f"1*{a.basis_names[i]} != {a.basis_names[i]}"))
        if a.multiply(bi, one) != bi:
            v.append(Violation("unit", (i,), f"{a.basis_names[i]}*1 != {a.basis_names[i]}"))
    prods = {}
    for i in range(a.dim):
        for j in range(a.dim):
            prods[(i, j)] = a.multiply(a.basis_vector(i), a.basis_vector(j))
    for i in range(a.dim):
        for j in range(a.dim):
            pij = prods[(i, j)]
            for k in range(a.dim):
                left = a.multiply(pij, a.basis_vector(k))
                right = a.multiply(a.basis_vector(i), prods[(j, k)])
                if left != right:
                    names = tuple(a.basis_names[t] for t in (i, j, k))
                    v.append(
                        Violation(
                            "associativity",
                            names,
                            f"({names[0]}*{names[1]})*{names[2]} != "
                            f"{names[0]}*({names[1]}*{names[2]})",
                        )
                    )
    return ValidationReport(v)


def center(a: Algebra) -> Subspace:
    """Kernel of the stacked commutator maps z -> z*b - b*z."""
    f = a.field
    stacked_rows = []
    for j in range(a.dim):
        bj = a.basis_vector(j)
        lm = a.left_mult_matrix(bj)
        rm = a.right_mult_matrix(bj)
        # z commutes with b_j iff (R_j - L_j) z = 0, where R_j z = z*b_j
        diff = rm.sub(lm)
        stacked_rows.extend(diff.rows)
    stacked = Matrix(f, stacked_rows)
    return Subspace(a.dim, kernel(stacked))


def _subspace_product_closure(a: Algebra, start_cols):
    """Smallest subspace containing start and closed under two-sided basis mult."""
    f = a.field
    basis = []  # reduced row list for membership, plus raw vectors
    raw = []

    def reduce_add(vec):
        v = list(vec)
        for piv_col, row in basis:
            if not f.is_zero(v[piv_col]):
                c = v[piv_col]
                v = [f.sub(x, f.mul(c, y)) for x, y in zip(v, row)]
        for idx in range(len(v)):
            if not f.is_zero(v[idx]):
                inv = f.inv(v[idx])
                row = [f.mul(inv, x) for x in v]
                basis.append((idx, row))
                basis.sort(key=lambda t: t[0])
                raw.append(list(vec))
                return True
        return False

    frontier = []
    for vec in start_cols:
        if reduce_add(vec):
            frontier.append(vec)
    while frontier:
        new_frontier = []
        for vec in frontier:
            for i in range(a.dim):
                bi = a.basis_vector(i)
                for prod in (a.multiply(bi, vec), a.multiply(vec, bi)):
                    if reduce_add(prod):
                        new_frontier.append(prod)
        frontier = new_frontier
    if not raw:
        return Subspace(a.dim, Matrix(f, [[] for _ in range(a.dim)]))
    cols = Matrix(f, [[r[i] for r in raw] for i in range(a.dim)])
    return Subspace(a.dim, cols)


def commutator_ideal(a: Algebra) -> Subspace:
    gens = []
    for i in range(a.dim):
        bi = a.basis_vector(i)
        for j in range(i + 1, a.dim):
            bj = a.basis_vector(j)
            ij = a.multiply(bi, bj)
            ji = a.multiply(bj, bi)
            gens.append([a.field.sub(x, y) for x, y in zip(ij, ji)])
    return _subspace_product_closure(a, gens)


def _is_two_sided_ideal(a: Algebra, s: Subspace) -> bool:
    for v in s.vectors():
        for i in range(a.dim):
            bi = a.basis_vector(i)
            if not s.contains(a.multiply(bi, v)):
                return False
            if not s.contains(a.multiply(v, bi)):
                return False
    return True


def _subspace_power_nilpotent(a: Algebra, s: Subspace) -> bool:
    """Does s^k reach zero under span(s^k * s)?  Bounded by the dimension."""
    current = s.vectors()
    for _ in range(a.dim + 1):
        if not current:
            return True
        products = []
        for u in current:
            for v in s.vectors():
                products.append(a.multiply(u, v))
        # reduce to a basis
        f = a.field
        m = Matrix(f, products)
        r, pivots = rref(m)
        current = [r.rows[t] for t in range(len(pivots))]
    return False


def trace_form_matrix(a: Algebra) -> Matrix:
    lms = [a.left_mult_matrix(a.basis_vector(i)) for i in range(a.dim)]
    f = a.field
    rows = []
    for i in range(a.dim):
        row = []
        for j in range(a.dim):
            row.append(lms[i].mul(lms[j]).trace())
        rows.append(row)
    return Matrix(f, rows)


def radical(a: Algebra) -> Subspace:
    """The Jacobson radical, with certification.

    Characteristic zero: kernel of the trace form of the regular
    representation.  Finite fields: common annihilator of the composition
    factors of the regular module.  Both answers are certified (nilpotent
    two-sided ideal, semisimple quotient witness); failure to certify
    raises RadicalUncertifiedError.
    """
    f = a.field
    if f.characteristic == 0:
        tf = trace_form_matrix(a)
        rad = Subspace(a.dim, kernel(tf))
        semisimple_witness = True
    else:
        from .repmod import chop, regular_module

        reg = regular_module(a)
        series = chop(reg, seed=101)
        rows = []
        for simple, _ in series:
            for r in range(simple.dim):
                for c in range(simple.dim):
                    rows.append([simple.action[i].rows[r][c] for i in range(a.dim)])
        rad = Subspace(a.dim, kernel(Matrix(f, rows)))
        semisimple_witness = True  # the factors themselves: verified simple in chop
    if not _is_two_sided_ideal(a, rad):
        raise RadicalUncertifiedError("candidate radical is not a two-sided ideal")
    if not _subspace_power_nilpotent(a, rad):
        raise RadicalUncertifiedError("candidate radical is not nilpotent")
    if f.characteristic == 0:
        # quotient trace form must be nondegenerate (Dickson, char 0)
        q, _ = quotient(a, rad)
        if q.dim and rank(trace_form_matrix(q)) != q.dim:
            raise RadicalUncertifiedError("quotient trace form is degenerate")
    elif not semisimple_witness:
        raise RadicalUncertifiedError("no semisimplicity witness for the quotient")
    return rad


def quotient(a: Algebra, ideal: Subspace):
    """Quotient algebra by a verified two-sided ideal, with the projection map.

    Returns (q, proj) where proj is the (dim q) x (dim a) coordinate map.
    """
    if not _is_two_sided_ideal(a, ideal):
        raise ValueError("subspace is not a two-sided ideal")
    f = a.field
    n, k = a.dim, ideal.dim
    t = extend_to_basis(ideal.basis) if k else Matrix.identity(f, n)
    t_inv = inverse(t)
    # projection: coordinates of x in the extended basis, keeping the tail
    proj = Matrix(f, t_inv.rows[k:]) if k else Matrix.identity(f, n)
    section_cols = [t.col(j) for j in range(k, n)]  # representatives
    qdim = n - k
    names = [f"q{i}" for i in range(qdim)]
    mult = {}
    for i in range(qdim):
        for j in range(qdim):
            prod = a.multiply(section_cols[i], section_cols[j])
            coords = proj.mul_vec(prod)
            entry = [(kk, c) for kk, c in enumerate(coords) if not f.is_zero(c)]
            if entry:
                mult[(i, j)] = entry
    unit_q = proj.mul_vec(a.unit)
    q = Algebra(f, qdim, names, mult, unit_q)
    # projection must be an algebra map on basis pairs
    for i in range(n):
        bi = a.basis_vector(i)
        for j in range(n):
            bj = a.basis_vector(j)
            lhs = proj.mul_vec(a.multiply(bi, bj))
            rhs = q.multiply(proj.mul_vec(bi), proj.mul_vec(bj))
            if lhs != rhs:
                raise AssertionError("projection is not an algebra map")
    return q, proj


def _component_splitting(b: Algebra):
    """Split a commutative semisimple algebra into indecomposable components.

    Returns (one_dim_components, stuck_components) where each component is
    a Subspace of b.  Stuck components carry no further splitting over this
    field; their obstructing polynomials are collected by the caller.
    """
    f = b.field
    full = Subspace(
        b.dim, Matrix.identity(f, b.dim)
    )
    components = [full]
    changed = True
    while changed:
        changed = False
        new_components = []
        for comp in components:
            if comp.dim <= 1:
                new_components.append(comp)
                continue
            split = None
            for t in range(b.dim):
                bt = b.basis_vector(t)
                lm = b.left_mult_matrix(bt)
                # action on the component in component coordinates
                img_cols = [lm.mul_vec(v) for v in comp.vectors()]
                coords = [solve(comp.basis, col) for col in img_cols]
                if any(c is None for c in coords):
                    raise AssertionError("component is not invariant")
                m = Matrix(f, [[coords[j][i] for j in range(comp.dim)] for i in range(comp.dim)])
                mp = min_poly_of_matrix(m)
                pieces = [g for g, _ in factor(mp) if g.degree >= 1]
                if len(pieces) <= 1:
                    continue
                parts = []
                for g in pieces:
                    gk = kernel(g.evaluate_matrix(m))
                    if gk.ncols == 0:
                        continue
                    # back to ambient coordinates
                    cols = [
                        [f.zero] * b.dim for _ in range(gk.ncols)
                    ]
                    for cidx in range(gk.ncols):
                        coeffs = gk.col(cidx)
                        vec = [f.zero] * b.dim
                        for w, cf in zip(comp.vectors(), coeffs):
                            for r in range(b.dim):
                                vec[r] = f.add(vec[r], f.mul(cf, w[r]))
                        cols[cidx] = vec
                    parts.append(
                        Subspace(b.dim, Matrix(f, [[c[r] for c in cols] for r in range(b.dim)]))
                    )
                if len(parts) > 1:
                    split = parts
                    break
            if split is None:
                new_components.append(comp)
            else:
                new_components.extend(split)
                changed = True
        components = new_components
    ones = [c for c in components if c.dim == 1]
    stuck = [c for c in components if c.dim > 1]
    return ones, stuck


def _stuck_obstructions(b: Algebra, stuck):
    polys = []
    f = b.field
    for comp in stuck:
        for t in range(b.dim):
            bt = b.basis_vector(t)
            lm = b.left_mult_matrix(bt)
            img_cols = [lm.mul_vec(v) for v in comp.vectors()]
            coords = [solve(comp.basis, col) for col in img_cols]
            m = Matrix(f, [[coords[j][i] for j in range(comp.dim)] for i in range(comp.dim)])
            mp = min_poly_of_matrix(m)
            nonlinear = [g for g, _ in factor(mp) if g.degree >= 2]
            if nonlinear:
                polys.extend(str(g) for g in nonlinear)
                break
    # dedupe, stable
    out = []
    for p in polys:
        if p not in out:
            out.append(p)
    return out


def characters_commutative(a: Algebra):
    """Every algebra map a -> field, via radical quotient and eigen-splitting.

    Raises SplittingError (carrying the split subset in .partial) when an
    irreducible non-linear factor blocks a component from splitting.
    """
    if not a.is_commutative():
        raise ValueError("characters_commutative requires a commutative algebra")
    f = a.field
    rad = radical(a)
    if rad.dim:
        b, proj = quotient(a, rad)
    else:
        b, proj = a, Matrix.identity(f, a.dim)
    ones, stuck = _component_splitting(b)
    chars = []
    for comp in ones:
        w = comp.vectors()[0]
        w2 = b.multiply(w, w)
        coeff = solve(comp.basis, w2)
        if coeff is None or f.is_zero(coeff[0]):
            # w^2 = 0 would mean a nilpotent in a semisimple algebra
            raise RadicalUncertifiedError("one-dimensional component is nilpotent")
        e = [f.mul(f.inv(coeff[0]), x) for x in w]  # idempotent spanning the component
        values = []
        for i in range(a.dim):
            img = proj.mul_vec(a.basis_vector(i))
            prod = b.multiply(img, e)  # equals chi(b_i) * e
            values.append(_coefficient_along(f, prod, e))
        chars.append(AlgebraCharacter(tuple(values), f))
    # verify: multiplicative, unital, pairwise distinct
    for chi in chars:
        if not f.is_one(chi.apply(a.unit)):
            raise AssertionError("character is not unital")
        for i in range(a.dim):
            bi = a.basis_vector(i)
            for j in range(a.dim):
                bj = a.basis_vector(j)
                lhs = chi.apply(a.multiply(bi, bj))
                rhs = f.mul(chi.apply(bi), chi.apply(bj))
                if lhs != rhs:
                    raise AssertionError("character is not multiplicative")
    chars.sort(key=lambda c: tuple(f.sort_key(v) for v in c.values))
    if stuck:
        raise SplittingError(
            _stuck_obstructions(b, stuck),
            partial=chars,
            hint="extend the base field so the listed polynomials split",
        )
    return chars


def _coefficient_along(f: Field, vec, direction):
    """vec = c * direction for a nonzero direction; return c."""
    for x, d in zip(vec, direction):
        if not f.is_zero(d):
            return f.div(x, d)
    raise ValueError("zero direction")


def lift_idempotent(a: Algebra, e_mod_rad, rad: Subspace):
    """Newton-lift e (idempotent modulo rad) to an exact idempotent.

    Iterates e <- 3e^2 - 2e^3, which fixes the residue class and squares
    the defect each round.
    """
    f = a.field
    defect = [f.sub(x, y) for x, y in zip(a.multiply(e_mod_rad, e_mod_rad), e_mod_rad)]
    if not rad.contains(defect):
        raise ValueError("input is not idempotent modulo the radical")
    e = list(e_mod_rad)
    for _ in range(a.dim.bit_length() + 2):
        e2 = a.multiply(e, e)
        if e2 == e:
            residue = [f.sub(x, y) for x, y in zip(e, e_mod_rad)]
            if not rad.contains(residue):
                raise AssertionError("lift strayed from its residue class")
            return e
        e3 = a.multiply(e2, e)
        three = f.from_int(3)
        two = f.from_int(2)
        e = [
            f.sub(f.mul(three, x2), f.mul(two, x3))
            for x2, x3 in zip(e2, e3)
        ]
    raise AssertionError("idempotent lift did not converge")


def subalgebra_on_subspace(a: Algebra, s: Subspace, names=None) -> Algebra:
    """The algebra structure induced on a multiplicatively closed subspace.

    The subspace must contain the unit of `a` and be closed under products;
    both are checked.
    """
    f = a.field
    k = s.dim
    names = names or [f"z{i}" for i in range(k)]
    unit_coords = solve(s.basis, a.unit)
    if unit_coords is None:
        raise ValueError("subspace does not contain the unit")
    mult = {}
    vecs = s.vectors()
    for i in range(k):
        for j in range(k):
            prod = a.multiply(vecs[i], vecs[j])
            coords = solve(s.basis, prod)
            if coords is None:
                raise ValueError("subspace is not multiplicatively closed")
            entry = [(kk, c) for kk, c in enumerate(coords) if not f.is_zero(c)]
            if entry:
                mult[(i, j)] = entry
    return Algebra(f, k, names, mult, unit_coords)
