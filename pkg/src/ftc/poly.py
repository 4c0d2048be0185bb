"""Univariate polynomials over a Field, with factorization.

Factorization is complete over finite fields (squarefree decomposition
followed by deterministic Berlekamp splitting).  Over Q it extracts
linear factors by rational-root search and cyclotomic factors by trial
division; anything left is returned as a single opaque block.  Over
extensions of Q linear factors are found among rational candidates and
the roots of unity available in the field; the remainder is again opaque.
Opaque blocks trigger SplittingError in the callers that need eigenvalues.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import UnsupportedFieldError
from .fields import EXTENSION, PRIME, RATIONALS, Field
from .linalg import Matrix, solve


class Poly:
    """Coefficients stored low-to-high with no trailing zeros; () is zero."""

    def __init__(self, field: Field, coeffs):
        self.field = field
        c = list(coeffs)
        while c and field.is_zero(c[-1]):
            c.pop()
        self.coeffs = tuple(c)

    @staticmethod
    def from_ints(field: Field, int_coeffs) -> "Poly":
        return Poly(field, [field.from_int(c) for c in int_coeffs])

    @staticmethod
    def x(field: Field) -> "Poly":
        return Poly(field, [field.zero, field.one])

    @staticmethod
    def constant(field: Field, c) -> "Poly":
        return Poly(field, [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return "0"
        f = self.field
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if f.is_zero(c):
                continue
            cs = f.to_str(c)
            if ("+" in cs or "-" in cs[1:]) and i > 0:
                cs = f"({cs})"
            if i == 0:
                terms.append(cs)
            else:
                xi = "x" if i == 1 else f"x^{i}"
                terms.append(xi if cs == "1" else f"{cs}*{xi}")
        return "+".join(terms).replace("+-", "-")

    def lead(self):
        return self.coeffs[-1]

    def add(self, other: "Poly") -> "Poly":
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        out = []
        for i in range(n):
            a = self.coeffs[i] if i < len(self.coeffs) else f.zero
            b = other.coeffs[i] if i < len(other.coeffs) else f.zero
            out.append(f.add(a, b))
        return Poly(f, out)

    def neg(self) -> "Poly":
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs])

    def sub(self, other: "Poly") -> "Poly":
        return self.add(other.neg())

    def mul(self, other: "Poly") -> "Poly":
        f = self.field
        if self.is_zero() or other.is_zero():
            return Poly(f, [])
        out = [f.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if f.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                if f.is_zero(b):
                    continue
                out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Poly(f, out)

    def scale(self, c) -> "Poly":
        f = self.field
        return Poly(f, [f.mul(c, a) for a in self.coeffs])

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lead()))

    def divmod(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(other.coeffs)
        if dq < 0:
            return Poly(f, []), self
        quo = [f.zero] * (dq + 1)
        inv_lead = f.inv(other.lead())
        for i in range(len(rem) - 1, len(other.coeffs) - 2, -1):
            if f.is_zero(rem[i]):
                continue
            q = f.mul(rem[i], inv_lead)
            quo[i - other.degree] = q
            for j, b in enumerate(other.coeffs):
                rem[i - other.degree + j] = f.sub(
                    rem[i - other.degree + j], f.mul(q, b)
                )
        return Poly(f, quo), Poly(f, rem)

    def mod(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def divides(self, other: "Poly") -> bool:
        return other.divmod(self)[1].is_zero()

    def derivative(self) -> "Poly":
        f = self.field
        return Poly(
            f,
            [
                f.mul(f.from_int(i), self.coeffs[i])
                for i in range(1, len(self.coeffs))
            ],
        )

    def evaluate(self, x):
        f = self.field
        acc = f.zero
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def evaluate_matrix(self, m: Matrix) -> Matrix:
        f = self.field
        acc = Matrix.zero(f, m.nrows, m.ncols)
        for c in reversed(self.coeffs):
            acc = acc.mul(m)
            for i in range(m.nrows):
                acc.rows[i][i] = f.add(acc.rows[i][i], c)
        return acc

    def pow_mod(self, e: int, modulus: "Poly") -> "Poly":
        result = Poly.from_ints(self.field, [1])
        acc = self.mod(modulus)
        while e:
            if e & 1:
                result = result.mul(acc).mod(modulus)
            acc = acc.mul(acc).mod(modulus)
            e >>= 1
        return result


def gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a.mod(b)
    return a.monic() if not a.is_zero() else a


def squarefree_decomposition(f: Poly):
    """List of (squarefree monic part, multiplicity), product = f/lead.

    Musser's algorithm with the characteristic-p branch: content whose
    derivative vanishes is a p-th power (perfect coefficient fields), so
    take coefficient p-th roots and recurse with multiplicities times p.
    """
    field = f.field
    p = field.characteristic
    f = f.monic()
    merged = {}
    order = []

    def emit(h: Poly, m: int):
        if h.degree < 1:
            return
        if h.coeffs not in merged:
            merged[h.coeffs] = [h, 0]
            order.append(h.coeffs)
        merged[h.coeffs][1] += m

    def pth_root_poly(g: Poly) -> Poly:
        # g' = 0 forces g = sum c_i x^(p*i); then g = (sum c_i^(1/p) x^i)^p
        coeffs = []
        for i in range(0, g.degree + 1, p):
            coeffs.append(_pth_root(field, g.coeffs[i]))
        return Poly(field, coeffs)

    def sqf(g: Poly, scale: int):
        if g.degree < 1:
            return
        d = g.derivative()
        if d.is_zero():
            sqf(pth_root_poly(g), scale * p)
            return
        a = gcd(g, d)
        w = g.divmod(a)[0]
        i = 1
        while w.degree > 0:
            y = gcd(w, a)
            emit(w.divmod(y)[0], i * scale)
            w = y
            a = a.divmod(y)[0]
            i += 1
        if a.degree > 0:
            sqf(pth_root_poly(a), scale * p)

    sqf(f, 1)
    return [(merged[c][0], merged[c][1]) for c in order]


def _pth_root(field: Field, c):
    p = field.characteristic
    q = field.order
    if q is None:
        raise UnsupportedFieldError("p-th roots need a finite field")
    # Frobenius is invertible: c = b^p with b = c^(q/p)
    return field.pow(c, q // p)


def _berlekamp_split(f: Poly):
    """Complete factorization of a squarefree monic f over a finite field."""
    field = f.field
    q = field.order
    n = f.degree
    if n <= 1:
        return [f]
    # Frobenius matrix: column i is x^(i*q) mod f
    cols = []
    xq = Poly.x(field).pow_mod(q, f)
    power = Poly.from_ints(field, [1])
    for i in range(n):
        cols.append(list(power.coeffs) + [field.zero] * (n - len(power.coeffs)))
        power = power.mul(xq).mod(f)
    frob = Matrix(field, [[cols[j][i] for j in range(n)] for i in range(n)])
    fro_minus_id = frob.sub(Matrix.identity(field, n))
    from .linalg import kernel

    null = kernel(fro_minus_id)
    r = null.ncols  # number of irreducible factors
    factors = [f]
    if r == 1:
        return factors
    for b in range(null.ncols):
        if len(factors) == r:
            break
        v = Poly(field, null.col(b))
        if v.degree < 1:
            continue
        for s in field.elements():
            if len(factors) == r:
                break
            shifted = v.sub(Poly.constant(field, s))
            new_factors = []
            for g in factors:
                h = gcd(shifted, g)
                if 0 < h.degree < g.degree:
                    new_factors.append(h)
                    new_factors.append(g.divmod(h)[0].monic())
                else:
                    new_factors.append(g)
            factors = new_factors
    if len(factors) != r:
        raise AssertionError("Berlekamp splitting incomplete")
    return factors


_cyclotomic_cache = {}


def cyclotomic(n: int) -> "list[int]":
    """Integer coefficients of the n-th cyclotomic polynomial."""
    if n in _cyclotomic_cache:
        return _cyclotomic_cache[n]
    q = Field.rationals()
    xn_minus_1 = Poly.from_ints(q, [-1] + [0] * (n - 1) + [1])
    result = xn_minus_1
    for d in range(1, n):
        if n % d == 0:
            phi_d = Poly.from_ints(q, cyclotomic(d))
            result = result.divmod(phi_d)[0]
    coeffs = [int(c) for c in result.coeffs]
    _cyclotomic_cache[n] = coeffs
    return coeffs


def rational_roots(f: Poly):
    """All rational roots with multiplicities, for f over Q."""
    field = f.field
    if field.kind != RATIONALS:
        raise ValueError("rational_roots needs a polynomial over Q")
    if f.is_zero():
        raise ValueError("zero polynomial")
    out = []
    # strip x^k
    k = 0
    while field.is_zero(f.coeffs[k]):
        k += 1
    if k:
        out.append((Fraction(0), k))
        f = Poly(field, f.coeffs[k:])
    if f.degree == 0:
        return out
    # clear denominators
    denom = 1
    for c in f.coeffs:
        denom = denom * c.denominator // _gcd_int(denom, c.denominator)
    ints = [int(c * denom) for c in f.coeffs]
    g = 0
    for c in ints:
        g = _gcd_int(g, abs(c))
    ints = [c // g for c in ints]
    a0, an = abs(ints[0]), abs(ints[-1])
    candidates = set()
    for p in _divisors(a0):
        for q in _divisors(an):
            if _gcd_int(p, q) == 1:
                candidates.add(Fraction(p, q))
                candidates.add(Fraction(-p, q))
    for cand in sorted(candidates):
        mult = 0
        while not f.is_zero() and f.degree >= 1 and field.is_zero(f.evaluate(cand)):
            f = f.divmod(Poly(field, [-cand, Fraction(1)]))[0]
            mult += 1
        if mult:
            out.append((cand, mult))
    return out


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _divisors(n: int):
    if n == 0:
        return [1]
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _factor_squarefree_rationals(f: Poly):
    field = f.field
    factors = []
    for root, mult in rational_roots(f):
        lin = Poly(field, [-root, Fraction(1)])
        for _ in range(mult):
            f = f.divmod(lin)[0]
            factors.append(lin)
    # cyclotomic trial division for the non-linear remainder
    if f.degree >= 2:
        d = 3
        bound = 2 * f.degree * f.degree + 2
        while d <= bound and f.degree >= 2:
            phi = Poly.from_ints(field, cyclotomic(d))
            if 2 <= phi.degree <= f.degree:
                while phi.divides(f):
                    f = f.divmod(phi)[0]
                    factors.append(phi)
            d += 1
    if f.degree >= 1:
        factors.append(f.monic())
    return factors


def _unit_root_candidates(field: Field):
    """Roots of unity reachable from the extension generator, plus 0 and ±1."""
    cands = [field.zero, field.one, field.neg(field.one)]
    best, best_ord = None, 1
    for c in (field.generator(), field.neg(field.generator())):
        o = field.multiplicative_order(c)
        if o is not None and o > best_ord:
            best, best_ord = c, o
    if best is not None:
        acc = best
        for _ in range(best_ord):
            if acc not in cands:
                cands.append(acc)
            acc = field.mul(acc, best)
    return cands


def _factor_squarefree_q_extension(f: Poly):
    field = f.field
    factors = []
    for cand in _unit_root_candidates(field):
        while f.degree >= 1 and field.is_zero(f.evaluate(cand)):
            lin = Poly(field, [field.neg(cand), field.one])
            f = f.divmod(lin)[0]
            factors.append(lin)
    # rational-root candidates apply when the remaining coefficients are scalar
    if f.degree >= 1 and all(_is_base_scalar(field, c) for c in f.coeffs):
        qf = Field.rationals()
        fq = Poly(qf, [c[0] for c in f.coeffs])
        for root, mult in rational_roots(fq):
            emb = tuple([root] + [qf.zero] * (field.degree - 1))
            lin = Poly(field, [field.neg(emb), field.one])
            for _ in range(mult):
                f = f.divmod(lin)[0]
                factors.append(lin)
    if f.degree >= 1:
        factors.append(f.monic())
    return factors


def _is_base_scalar(field: Field, c) -> bool:
    return all(field.base.is_zero(x) for x in c[1:])


def factor(f: Poly):
    """Factor f as list of (monic factor, multiplicity) plus a unit factor.

    The product of all returned factors (with multiplicities) reproduces f
    exactly.  Over finite fields every factor is irreducible; over Q and
    its extensions non-linear leftovers may come back as one opaque block.
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    field = f.field
    out = []
    lead = f.lead()
    if not field.is_one(lead):
        out.append((Poly.constant(field, lead), 1))
    parts = squarefree_decomposition(f)
    for part, mult in parts:
        if field.order is not None:
            subfactors = _berlekamp_split(part)
        elif field.kind == RATIONALS:
            subfactors = _factor_squarefree_rationals(part)
        elif field.kind == EXTENSION:
            subfactors = _factor_squarefree_q_extension(part)
        else:
            raise UnsupportedFieldError(f"cannot factor over {field!r}")
        counts = {}
        order = []
        for g in subfactors:
            if g.coeffs not in counts:
                counts[g.coeffs] = [g, 0]
                order.append(g.coeffs)
            counts[g.coeffs][1] += 1
        for c in order:
            g, reps = counts[c]
            out.append((g, reps * mult))
    # deterministic order: degree, then coefficient sort keys
    def key(pair):
        g, _ = pair
        return (g.degree, tuple(field.sort_key(c) for c in g.coeffs))

    return sorted(out, key=key)


def linear_roots(f: Poly):
    """Roots in the coefficient field with multiplicities, plus leftovers.

    Returns (roots, obstructions) where roots is a list of (root, mult)
    and obstructions the non-linear factors that could not be split.
    """
    roots = []
    obstructions = []
    for g, mult in factor(f):
        if g.degree == 1:
            # monic x + c -> root -c
            roots.append((f.field.neg(g.coeffs[0]), mult))
        elif g.degree >= 2:
            obstructions.append((g, mult))
    return roots, obstructions


def min_poly_of_matrix(m: Matrix) -> Poly:
    """Minimal polynomial of a square matrix."""
    field = m.field
    n = m.nrows
    powers = [Matrix.identity(field, n)]
    while True:
        k = len(powers)
        # solve: is m^k a combination of lower powers?
        cols = [
            [p.rows[i][j] for p in powers]
            for i in range(n)
            for j in range(n)
        ]
        a = Matrix(field, cols)
        target = powers[-1].mul(m)
        b = [target.rows[i][j] for i in range(n) for j in range(n)]
        x = solve(a, b)
        if x is not None:
            coeffs = [field.neg(c) for c in x] + [field.one]
            return Poly(field, coeffs)
        powers.append(target)
        if k > n:
            raise AssertionError("minimal polynomial search exceeded dimension")
