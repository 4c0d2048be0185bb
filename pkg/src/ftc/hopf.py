"""Finite-dimensional Hopf algebras by structure constants.

Grouplike elements are found through the dual: an element g is grouplike
exactly when evaluation at g is an algebra character of the convolution
dual, so we quotient the dual by its commutator ideal, list the characters
of the commutative quotient, and pull them back.  Every returned element
is then re-verified directly against the comultiplication and counit, and
the set is checked to be a group.  A brute-force solver over all
coefficient vectors (with constraint pruning) lives in the test suite as
an independent oracle for small dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import (
    Algebra,
    center,
    characters_commutative,
    commutator_ideal,
    quotient,
    verify_algebra,
)
from .errors import SplittingError
from .linalg import Matrix, rank
from .report import ValidationReport, Violation


@dataclass
class HopfAlgebra:
    alg: Algebra
    comult: dict  # i -> list of (j, k, scalar): Delta(b_i) = sum c * b_j (x) b_k
    counit: list  # row vector of counit values on the basis
    antipode: Matrix  # column j holds the coefficients of S(b_j)

    def comult_of(self, i: int):
        return self.comult.get(i, [])

    def comult_vec(self, x):
        """Delta(x) as a dict (j, k) -> scalar."""
        f = self.alg.field
        out = {}
        for i, c in enumerate(x):
            if f.is_zero(c):
                continue
            for (j, k, s) in self.comult_of(i):
                key = (j, k)
                out[key] = f.add(out.get(key, f.zero), f.mul(c, s))
        return {k: v for k, v in out.items() if not f.is_zero(v)}

    def counit_of(self, x):
        f = self.alg.field
        acc = f.zero
        for c, e in zip(x, self.counit):
            acc = f.add(acc, f.mul(c, e))
        return acc

    def antipode_of(self, x):
        return self.antipode.mul_vec(x)


def _tensor_mult(a: Algebra, u: dict, v: dict) -> dict:
    """Multiply in A (x) A, elements as dicts (i, j) -> scalar."""
    f = a.field
    out = {}
    for (i, j), c in u.items():
        for (k, l), d in v.items():
            cd = f.mul(c, d)
            for m, s in a.basis_product(i, k):
                cs = f.mul(cd, s)
                for n, s2 in a.basis_product(j, l):
                    key = (m, n)
                    out[key] = f.add(out.get(key, f.zero), f.mul(cs, s2))
    return {k: v for k, v in out.items() if not f.is_zero(v)}


def verify_hopf(h: HopfAlgebra) -> ValidationReport:
    """Check every bialgebra and antipode axiom on the basis; itemize failures."""
    v = list(verify_algebra(h.alg).violations)
    a = h.alg
    f = a.field
    n = a.dim
    names = a.basis_names

    # coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta on b_i
    for i in range(n):
        left = {}
        right = {}
        for (j, k, c) in h.comult_of(i):
            for (p, q, d) in h.comult_of(j):
                key = (p, q, k)
                left[key] = f.add(left.get(key, f.zero), f.mul(c, d))
            for (p, q, d) in h.comult_of(k):
                key = (j, p, q)
                right[key] = f.add(right.get(key, f.zero), f.mul(c, d))
        left = {k2: v2 for k2, v2 in left.items() if not f.is_zero(v2)}
        right = {k2: v2 for k2, v2 in right.items() if not f.is_zero(v2)}
        if left != right:
            v.append(Violation("coassociativity", (names[i],), "legs disagree"))

    # counit axioms: (eps (x) id) Delta(b_i) = b_i = (id (x) eps) Delta(b_i)
    for i in range(n):
        lvec = [f.zero] * n
        rvec = [f.zero] * n
        for (j, k, c) in h.comult_of(i):
            lvec[k] = f.add(lvec[k], f.mul(c, h.counit[j]))
            rvec[j] = f.add(rvec[j], f.mul(c, h.counit[k]))
        if lvec != a.basis_vector(i):
            v.append(Violation("counit", (names[i],), "(eps x id)Delta != id"))
        if rvec != a.basis_vector(i):
            v.append(Violation("counit", (names[i],), "(id x eps)Delta != id"))

    # Delta is an algebra map
    delta_unit = h.comult_vec(a.unit)
    expected = {}
    for i, ci in enumerate(a.unit):
        if f.is_zero(ci):
            continue
        for j, cj in enumerate(a.unit):
            if f.is_zero(cj):
                continue
            expected[(i, j)] = f.add(expected.get((i, j), f.zero), f.mul(ci, cj))
    expected = {k: val for k, val in expected.items() if not f.is_zero(val)}
    if delta_unit != expected:
        v.append(Violation("bialgebra", ("1",), "Delta(1) != 1 x 1"))
    for i in range(n):
        di = {(j, k): c for (j, k, c) in h.comult_of(i)}
        for j in range(n):
            dj = {(p, q): c for (p, q, c) in h.comult_of(j)}
            lhs = h.comult_vec(a.multiply(a.basis_vector(i), a.basis_vector(j)))
            rhs = _tensor_mult(a, di, dj)
            if lhs != rhs:
                v.append(
                    Violation(
                        "bialgebra",
                        (names[i], names[j]),
                        "Delta is not multiplicative here",
                    )
                )
    for i in range(n):
        for j in range(n):
            lhs = h.counit_of(a.multiply(a.basis_vector(i), a.basis_vector(j)))
            rhs = f.mul(h.counit[i], h.counit[j])
            if lhs != rhs:
                v.append(
                    Violation(
                        "bialgebra",
                        (names[i], names[j]),
                        "counit is not multiplicative here",
                    )
                )
    if not f.is_one(h.counit_of(a.unit)):
        v.append(Violation("bialgebra", ("1",), "eps(1) != 1"))

    # antipode axiom: m(S x id)Delta(b_i) = eps(b_i) 1 = m(id x S)Delta(b_i)
    for i in range(n):
        left = [f.zero] * n
        right = [f.zero] * n
        for (j, k, c) in h.comult_of(i):
            sleft = a.multiply(h.antipode.col(j), a.basis_vector(k))
            sright = a.multiply(a.basis_vector(j), h.antipode.col(k))
            for t in range(n):
                left[t] = f.add(left[t], f.mul(c, sleft[t]))
                right[t] = f.add(right[t], f.mul(c, sright[t]))
        target = [f.mul(h.counit[i], u) for u in a.unit]
        if left != target:
            v.append(Violation("antipode", (names[i],), "m(S x id)Delta != eps*1"))
        if right != target:
            v.append(Violation("antipode", (names[i],), "m(id x S)Delta != eps*1"))
    return ValidationReport(v)


def dual_algebra(h: HopfAlgebra) -> Algebra:
    """Convolution algebra on the dual basis: structure constants are the
    comultiplication constants transposed; the unit is the counit."""
    a = h.alg
    f = a.field
    mult = {}
    for i in range(a.dim):
        for (j, k, c) in h.comult_of(i):
            mult.setdefault((j, k), []).append((i, c))
    dual = Algebra(
        f,
        a.dim,
        [f"d({name})" for name in a.basis_names],
        mult,
        list(h.counit),
    )
    report = verify_algebra(dual)
    if not report.is_valid:
        raise ValueError(f"dual of an invalid Hopf algebra:\n{report}")
    return dual


@dataclass
class GrouplikeSet:
    """A finite group of verified grouplike elements with its multiplication table."""

    elements: list  # coefficient vectors
    table: list  # table[i][j] = index of elements[i] * elements[j]
    identity: int
    obstructions: list = dc_field(default_factory=list)

    def __len__(self):
        return len(self.elements)

    def index_of(self, vec) -> int:
        for i, e in enumerate(self.elements):
            if e == vec:
                return i
        raise ValueError("element not in the set")

    def order_of(self, i: int) -> int:
        k = 1
        acc = i
        while acc != self.identity:
            acc = self.table[acc][i]
            k += 1
            if k > len(self.elements):
                raise AssertionError("order exceeds the group size")
        return k


def is_grouplike(h: HopfAlgebra, x) -> bool:
    f = h.alg.field
    if not f.is_one(h.counit_of(x)):
        return False
    dx = h.comult_vec(x)
    expected = {}
    for j, cj in enumerate(x):
        if f.is_zero(cj):
            continue
        for k, ck in enumerate(x):
            if f.is_zero(ck):
                continue
            expected[(j, k)] = f.mul(cj, ck)
    return dx == expected


def _closure_table(h: HopfAlgebra, elements):
    a = h.alg
    table = []
    for x in elements:
        row = []
        for y in elements:
            prod = a.multiply(x, y)
            try:
                row.append(elements.index(prod))
            except ValueError:
                raise AssertionError("grouplike set is not closed under products")
        table.append(row)
    for row in table:
        if sorted(row) != list(range(len(elements))):
            raise AssertionError("grouplike multiplication table is not a group")
    return table


def _assemble_grouplike_set(h: HopfAlgebra, vectors, obstructions):
    a = h.alg
    f = a.field
    for g in vectors:
        if not is_grouplike(h, g):
            raise AssertionError("candidate fails the grouplike equations")
    uniq = []
    for g in vectors:
        if g not in uniq:
            uniq.append(g)
    if a.unit not in uniq:
        uniq.append(a.unit)
    uniq.sort(key=lambda vec: tuple(f.sort_key(c) for c in vec))
    identity = uniq.index(a.unit)
    # identity first, rest keep coefficient order
    ordered = [uniq[identity]] + uniq[:identity] + uniq[identity + 1 :]
    table = _closure_table(h, ordered)
    return GrouplikeSet(ordered, table, 0, obstructions)


def grouplikes(h: HopfAlgebra) -> GrouplikeSet:
    """All grouplike elements, via characters of the dual's commutative quotient.

    If the field fails to split the character search, the SplittingError is
    re-raised carrying the verified partial set in .partial.
    """
    dual = dual_algebra(h)
    comm = commutator_ideal(dual)
    if comm.dim:
        q, proj = quotient(dual, comm)
    else:
        q, proj = dual, Matrix.identity(dual.field, dual.dim)
    if not q.is_commutative():
        raise AssertionError("commutator quotient is not commutative")
    obstructions = []
    try:
        chars = characters_commutative(q)
    except SplittingError as err:
        chars = err.partial or []
        obstructions = list(err.polynomials)
    vectors = []
    for chi in chars:
        g = [chi.apply(proj.mul_vec(h.alg.basis_vector(i))) for i in range(h.alg.dim)]
        vectors.append(g)
    gs = _assemble_grouplike_set(h, vectors, obstructions)
    if obstructions:
        raise SplittingError(
            obstructions,
            partial=gs,
            hint="grouplike list may be incomplete; extend the field",
        )
    return gs


def central_grouplikes(h: HopfAlgebra, gs: GrouplikeSet = None) -> GrouplikeSet:
    """The subgroup of grouplikes commuting with every basis element."""
    if gs is None:
        gs = grouplikes(h)
    a = h.alg
    central = []
    for g in gs.elements:
        if all(
            a.multiply(g, a.basis_vector(i)) == a.multiply(a.basis_vector(i), g)
            for i in range(a.dim)
        ):
            central.append(g)
    return _assemble_grouplike_set(h, central, list(gs.obstructions))


def pivotal_grouplikes(h: HopfAlgebra, gs: GrouplikeSet = None):
    """Grouplikes g with S^2(x) = g x g^{-1}, i.e. S^2(b) g = g b on the basis.

    Returns the list of pivotal elements; when nonempty it is verified to
    be exactly one coset of the central grouplikes.
    """
    if gs is None:
        gs = grouplikes(h)
    a = h.alg
    f = a.field
    s2 = h.antipode.mul(h.antipode)
    pivotal = []
    for g in gs.elements:
        ok = True
        for i in range(a.dim):
            lhs = a.multiply(s2.col(i), g)
            rhs = a.multiply(g, a.basis_vector(i))
            if lhs != rhs:
                ok = False
                break
        if ok:
            pivotal.append(g)
    if pivotal:
        cg = central_grouplikes(h, gs)
        g0 = pivotal[0]
        coset = [a.multiply(g0, c) for c in cg.elements]
        if sorted(map(tuple, coset), key=str) != sorted(map(tuple, pivotal), key=str):
            raise AssertionError("pivotal set is not a coset of the central grouplikes")
    return pivotal


def grouplike_independence(gs: GrouplikeSet, field) -> bool:
    """Are the elements linearly independent as vectors?"""
    if not gs.elements:
        return True
    m = Matrix(field, [list(col) for col in zip(*gs.elements)])
    return rank(m) == len(gs.elements)


@dataclass
class GrouplikeSubgroupDecomposition:
    p_part: list  # indices into the grouplike set
    p_prime_part: list

    def sizes(self):
        return len(self.p_part), len(self.p_prime_part)


def decompose_p_parts(gs: GrouplikeSet, char_p: int) -> GrouplikeSubgroupDecomposition:
    """Split a finite group of grouplikes into p-power-order and prime-to-p parts.

    In characteristic zero the p-part is just the identity.  The
    factorization g = (p-part)(p'-part) is verified to be unique; group
    data where that fails (only possible away from the abelian setting this
    serves) is rejected.
    """
    n = len(gs.elements)
    orders = [gs.order_of(i) for i in range(n)]
    if char_p == 0:
        p_part = [gs.identity]
        p_prime = list(range(n))
    else:
        p_part = [i for i in range(n) if _is_p_power(orders[i], char_p)]
        p_prime = [i for i in range(n) if orders[i] % char_p != 0]
    if len(p_part) * len(p_prime) != n:
        raise ValueError(
            "p-part and p'-part do not factor the group; the grouplike set "
            "is not an internal direct product"
        )
    # uniqueness of the factorization
    seen = {}
    for x in p_part:
        for y in p_prime:
            g = gs.table[x][y]
            if g in seen:
                raise ValueError("non-unique factorization into p- and p'-parts")
            seen[g] = (x, y)
    if len(seen) != n:
        raise ValueError("p- and p'-parts do not reconstruct the group")
    return GrouplikeSubgroupDecomposition(p_part, p_prime)


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1
