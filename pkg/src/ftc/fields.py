"""Exact scalar arithmetic over Q, prime fields F_p, and simple extensions.

A ``Field`` bundles the description of the field (its *spec*) with the
arithmetic on canonical scalar values:

* rationals      -> ``fractions.Fraction`` (auto-reduced)
* prime field    -> ``int`` in ``[0, p)``
* extension      -> ``tuple`` of base scalars of fixed length ``deg(min_poly)``

Extensions are single-step only: the base must be Q or F_p, never another
extension.  All values are immutable and hashable, so they can be used as
dict keys and compared with ``==`` directly.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import FieldMismatchError, SplittingError, UnsupportedFieldError

RATIONALS = "Q"
PRIME = "Fp"
EXTENSION = "ext"

_MAX_ENUMERABLE = 200_000


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """A computable field: Q, F_p, or a simple extension of one of them."""

    def __init__(self, kind, p=None, base=None, min_poly=None):
        self.kind = kind
        self.p = p
        self.base = base
        # min_poly: tuple of base scalars, monic, length degree+1
        self.min_poly = min_poly
        if kind == EXTENSION:
            self.degree = len(min_poly) - 1
        else:
            self.degree = 1

    # -- constructors -------------------------------------------------

    @staticmethod
    def rationals() -> "Field":
        return Field(RATIONALS)

    @staticmethod
    def prime(p: int) -> "Field":
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        return Field(PRIME, p=p)

    @staticmethod
    def extension(base: "Field", int_coeffs) -> "Field":
        """Build base[t]/(m) from integer coefficients c0..c_{d-1}, 1 of a monic m."""
        if base.kind == EXTENSION:
            raise ValueError("extension towers are not supported")
        coeffs = [base.from_int(c) for c in int_coeffs]
        if len(coeffs) < 3:
            raise ValueError("min_poly must have degree >= 2")
        if coeffs[-1] != base.one:
            raise ValueError("min_poly must be monic")
        fld = Field(EXTENSION, p=base.p, base=base, min_poly=tuple(coeffs))
        fld._check_min_poly(int_coeffs)
        return fld

    def _check_min_poly(self, int_coeffs):
        # Over F_p full irreducibility is cheap to certify; over Q we only
        # rule out rational roots here and let inversion detect any other
        # zero divisor lazily.
        from . import poly

        base = self.base
        m = poly.Poly(base, self.min_poly)
        if base.kind == PRIME:
            factors = poly.factor(m)
            if len(factors) != 1 or factors[0][1] != 1:
                raise ValueError(
                    f"min_poly {m} is reducible over F_{base.p}: "
                    + ", ".join(str(f) for f, _ in factors)
                )
        else:
            for root, _ in poly.rational_roots(m):
                raise ValueError(f"min_poly {m} has rational root {root}")

    # -- identity ------------------------------------------------------

    def _key(self):
        if self.kind == EXTENSION:
            return (self.kind, self.base._key(), self.min_poly)
        return (self.kind, self.p)

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.kind == RATIONALS:
            return "Q"
        if self.kind == PRIME:
            return f"F{self.p}"
        inner = "+".join(
            f"{self.base.to_str(c)}*t^{i}" if i else self.base.to_str(c)
            for i, c in enumerate(self.min_poly)
            if not self.base.is_zero(c)
        )
        return f"{self.base!r}[t]/({inner})"

    # -- basic properties ----------------------------------------------

    @property
    def characteristic(self) -> int:
        return self.p if self.p is not None else 0

    @property
    def order(self):
        """Number of elements, or None when infinite."""
        if self.kind == RATIONALS:
            return None
        if self.kind == PRIME:
            return self.p
        if self.base.kind == RATIONALS:
            return None
        return self.base.p ** self.degree

    @property
    def zero(self):
        if self.kind == RATIONALS:
            return Fraction(0)
        if self.kind == PRIME:
            return 0
        return tuple([self.base.zero] * self.degree)

    @property
    def one(self):
        return self.from_int(1)

    def from_int(self, n: int):
        if self.kind == RATIONALS:
            return Fraction(n)
        if self.kind == PRIME:
            return n % self.p
        c = [self.base.zero] * self.degree
        c[0] = self.base.from_int(n)
        return tuple(c)

    def generator(self):
        """The class of t in an extension field."""
        if self.kind != EXTENSION:
            raise ValueError("only extensions have a generator")
        c = [self.base.zero] * self.degree
        c[1] = self.base.one
        return tuple(c)

    # -- arithmetic ------------------------------------------------------

    def add(self, a, b):
        if self.kind == RATIONALS:
            return a + b
        if self.kind == PRIME:
            return (a + b) % self.p
        base = self.base
        return tuple(base.add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        if self.kind == RATIONALS:
            return -a
        if self.kind == PRIME:
            return (-a) % self.p
        return tuple(self.base.neg(x) for x in a)

    def mul(self, a, b):
        if self.kind == RATIONALS:
            return a * b
        if self.kind == PRIME:
            return (a * b) % self.p
        base = self.base
        d = self.degree
        prod = [base.zero] * (2 * d - 1)
        for i, x in enumerate(a):
            if base.is_zero(x):
                continue
            for j, y in enumerate(b):
                if base.is_zero(y):
                    continue
                prod[i + j] = base.add(prod[i + j], base.mul(x, y))
        return self._reduce(prod)

    def _reduce(self, coeffs):
        """Reduce a coefficient list modulo min_poly (monic division)."""
        base = self.base
        d = self.degree
        c = list(coeffs)
        for i in range(len(c) - 1, d - 1, -1):
            lead = c[i]
            if base.is_zero(lead):
                continue
            # subtract lead * t^(i-d) * min_poly
            for j in range(d + 1):
                c[i - d + j] = base.sub(c[i - d + j], base.mul(lead, self.min_poly[j]))
        return tuple(c[:d])

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        if self.kind == RATIONALS:
            return 1 / a
        if self.kind == PRIME:
            return pow(a, self.p - 2, self.p)
        return self._ext_inv(a)

    def _ext_inv(self, a):
        # extended Euclid on (a as polynomial, min_poly) over the base field
        base = self.base

        def degree(c):
            for i in range(len(c) - 1, -1, -1):
                if not base.is_zero(c[i]):
                    return i
            return -1

        def polymod(num, den):
            num = list(num)
            dd = degree(den)
            lead_inv = base.inv(den[dd])
            quo = [base.zero] * max(len(num) - dd, 1)
            for i in range(degree(num), dd - 1, -1):
                if base.is_zero(num[i]):
                    continue
                q = base.mul(num[i], lead_inv)
                quo[i - dd] = q
                for j in range(dd + 1):
                    num[i - dd + j] = base.sub(num[i - dd + j], base.mul(q, den[j]))
            return quo, num

        r0, r1 = list(self.min_poly), list(a)
        s0, s1 = [base.zero], [base.one]
        while degree(r1) > 0:
            q, r = polymod(r0, r1)
            r0, r1 = r1, r
            # s_next = s0 - q*s1
            qs = [base.zero] * (len(q) + len(s1))
            for i, x in enumerate(q):
                for j, y in enumerate(s1):
                    qs[i + j] = base.add(qs[i + j], base.mul(x, y))
            s_next = [base.zero] * max(len(s0), len(qs))
            for i in range(len(s_next)):
                u = s0[i] if i < len(s0) else base.zero
                v = qs[i] if i < len(qs) else base.zero
                s_next[i] = base.sub(u, v)
            s0, s1 = s1, s_next
        if degree(r1) != 0:
            raise ValueError(
                f"min_poly is not irreducible: zero divisor detected in {self!r}"
            )
        c = base.inv(r1[0])
        return self._reduce([base.mul(c, x) for x in s1])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n: int):
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = self.one
        acc = a
        while n:
            if n & 1:
                result = self.mul(result, acc)
            acc = self.mul(acc, acc)
            n >>= 1
        return result

    def is_zero(self, a) -> bool:
        return a == self.zero

    def is_one(self, a) -> bool:
        return a == self.one

    # -- enumeration and roots of unity -----------------------------------

    def elements(self):
        """Iterate all elements of a finite field in a fixed order."""
        if self.order is None:
            raise UnsupportedFieldError("cannot enumerate an infinite field")
        if self.order > _MAX_ENUMERABLE:
            raise UnsupportedFieldError(f"field too large to enumerate ({self.order})")
        if self.kind == PRIME:
            yield from range(self.p)
            return
        base_elems = list(self.base.elements())
        idx = [0] * self.degree
        while True:
            yield tuple(base_elems[i] for i in idx)
            k = 0
            while k < self.degree:
                idx[k] += 1
                if idx[k] < len(base_elems):
                    break
                idx[k] = 0
                k += 1
            if k == self.degree:
                return

    def multiplicative_order(self, a, bound=None):
        """Order of a in the unit group, or None if no power up to bound is 1."""
        if self.is_zero(a):
            return None
        q = self.order
        if q is not None:
            n = q - 1
            # strip prime factors while the power stays 1
            ord_ = n
            for ell in _prime_factors(n):
                while ord_ % ell == 0 and self.is_one(self.pow(a, ord_ // ell)):
                    ord_ //= ell
            return ord_ if self.is_one(self.pow(a, ord_)) else None
        if bound is None:
            bound = 4 * self.degree * self.degree + 16
        acc = a
        for k in range(1, bound + 1):
            if self.is_one(acc):
                return k
            acc = self.mul(acc, a)
        return None

    def root_of_unity(self, m: int):
        """An element of multiplicative order exactly m, or SplittingError."""
        if m == 1:
            return self.one
        if m == 2 and self.characteristic != 2:
            return self.neg(self.one)
        if self.kind == RATIONALS:
            raise SplittingError(
                [f"x^{m} - 1"],
                hint=f"extend Q by the {m}-th cyclotomic polynomial",
            )
        q = self.order
        if q is not None:
            if (q - 1) % m != 0:
                raise SplittingError(
                    [f"x^{m} - 1"],
                    hint=f"no element of order {m} in a field with {q} elements; "
                    f"use a field of order 1 mod {m}",
                )
            for x in self.elements():
                if self.is_zero(x):
                    continue
                ord_ = self.multiplicative_order(x)
                if ord_ % m == 0:
                    return self.pow(x, ord_ // m)
            raise AssertionError("unit group of a finite field is cyclic")
        # extension of Q: roots of unity live in the group generated by -t
        # whenever the presentation is cyclotomic-like
        best = None
        best_ord = 1
        for cand in (self.generator(), self.neg(self.generator())):
            ord_ = self.multiplicative_order(cand)
            if ord_ is not None and ord_ > best_ord:
                best, best_ord = cand, ord_
        if best is not None and best_ord % m == 0:
            return self.pow(best, best_ord // m)
        raise SplittingError(
            [f"x^{m} - 1"],
            hint=f"no root of unity of order {m} found among powers of the "
            f"field generator; present the field by a cyclotomic polynomial",
        )

    def random_scalar(self, rng):
        """A random element (uniform for finite fields)."""
        if self.kind == PRIME:
            return rng.randrange(self.p)
        if self.kind == RATIONALS:
            return Fraction(rng.randrange(-(1 << 10), 1 << 10))
        return tuple(self.base.random_scalar(rng) for _ in range(self.degree))

    # -- display and ordering ---------------------------------------------

    def sort_key(self, a):
        if self.kind == RATIONALS:
            return (a.numerator, a.denominator)
        if self.kind == PRIME:
            return a
        return tuple(self.base.sort_key(x) for x in a)

    def to_str(self, a) -> str:
        if self.kind == RATIONALS:
            return str(a)
        if self.kind == PRIME:
            return str(a)
        terms = []
        for i, c in enumerate(a):
            if self.base.is_zero(c):
                continue
            cs = self.base.to_str(c)
            if i == 0:
                terms.append(cs)
            elif i == 1:
                terms.append(f"{cs}*t" if cs != "1" else "t")
            else:
                terms.append(f"{cs}*t^{i}" if cs != "1" else f"t^{i}")
        return "+".join(terms).replace("+-", "-") if terms else "0"


def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def same_field(*fields: Field) -> Field:
    """Assert all arguments are one field and return it."""
    first = fields[0]
    for f in fields[1:]:
        if f != first:
            raise FieldMismatchError(f"mixed fields: {first!r} vs {f!r}")
    return first
