"""Dense univariate polynomials over an exact field.

Coefficients are stored in ascending powers with no trailing zeros;
the zero polynomial has an empty coefficient tuple and degree -1.
Polynomials are immutable and hashable.
"""

from .fields import require_same_field


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        cs = [field.coerce(c) for c in coeffs]
        while cs and field.is_zero(cs[-1]):
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (field.one,))

    @classmethod
    def constant(cls, field, c):
        return cls(field, (c,))

    @classmethod
    def variable(cls, field):
        return cls(field, (field.zero, field.one))

    @classmethod
    def monomial(cls, field, c, k):
        return cls(field, (field.zero,) * k + (c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == self.field.one

    def coeff(self, k: int):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.field.zero

    @property
    def leading_coeff(self):
        if not self.coeffs:
            return self.field.zero
        return self.coeffs[-1]

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        require_same_field(self.field, other.field)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Poly(f, out)

    def __neg__(self):
        f = self.field
        return Poly(f, [f.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        require_same_field(self.field, other.field)
        f = self.field
        if self.is_zero() or other.is_zero():
            return Poly.zero(f)
        a, b = self.coeffs, other.coeffs
        out = [f.zero] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if f.is_zero(ca):
                continue
            for j, cb in enumerate(b):
                out[i + j] = f.add(out[i + j], f.mul(ca, cb))
        return Poly(f, out)

    def scale(self, c):
        f = self.field
        c = f.coerce(c)
        return Poly(f, [f.mul(c, a) for a in self.coeffs])

    def shift(self, k: int):
        """Multiply by x^k."""
        if self.is_zero():
            return self
        return Poly(self.field, (self.field.zero,) * k + self.coeffs)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        require_same_field(self.field, other.field)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        f = self.field
        rem = list(self.coeffs)
        db = other.degree
        lead_inv = f.inv(other.leading_coeff)
        quo = [f.zero] * max(len(rem) - db, 0)
        for i in range(len(rem) - db - 1, -1, -1):
            c = f.mul(rem[i + db], lead_inv)
            if f.is_zero(c):
                continue
            quo[i] = c
            for j, bc in enumerate(other.coeffs):
                rem[i + j] = f.sub(rem[i + j], f.mul(c, bc))
        return Poly(f, quo), Poly(f, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other) -> bool:
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def evaluate(self, c):
        f = self.field
        c = f.coerce(c)
        acc = f.zero
        for a in reversed(self.coeffs):
            acc = f.add(f.mul(acc, c), a)
        return acc

    def derivative(self):
        f = self.field
        return Poly(f, [f.mul(f.from_int(i), c) for i, c in enumerate(self.coeffs)][1:])

    def monic(self):
        """Scale so the leading coefficient is one; zero stays zero."""
        if self.is_zero():
            return self
        f = self.field
        lc = self.leading_coeff
        if lc == f.one:
            return self
        return self.scale(f.inv(lc))

    def compose(self, inner):
        """Substitute inner for the variable (Horner)."""
        require_same_field(self.field, inner.field)
        acc = Poly.zero(self.field)
        for a in reversed(self.coeffs):
            acc = acc * inner + Poly.constant(self.field, a)
        return acc

    def __repr__(self):
        from .parsing import poly_to_str

        return f"Poly({poly_to_str(self)})"


def reversal(z: Poly, g: int) -> Poly:
    """Coefficient reversal with respect to a grade g >= deg z."""
    if g < z.degree:
        raise ValueError(f"grade {g} below degree {z.degree}")
    coeffs = [z.coeff(g - i) for i in range(g + 1)]
    return Poly(z.field, coeffs)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    require_same_field(a.field, b.field)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials")
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def gcd_extended(a: Poly, b: Poly):
    """Monic gcd g plus cofactors (g, u, v) with u*a + v*b = g."""
    require_same_field(a.field, b.field)
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials")
    f = a.field
    r0, r1 = a, b
    u0, u1 = Poly.one(f), Poly.zero(f)
    v0, v1 = Poly.zero(f), Poly.one(f)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    lc = r0.leading_coeff
    inv = f.inv(lc)
    return r0.scale(inv), u0.scale(inv), v0.scale(inv)


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly.zero(a.field)
    return (a * b).exact_div(poly_gcd(a, b)).monic()


def valuation(p: Poly, base: Poly) -> int:
    """Largest k with base^k dividing p; p must be nonzero, base nonconstant."""
    if p.is_zero():
        raise ValueError("valuation of the zero polynomial")
    if base.degree < 1:
        raise ValueError("valuation base must be nonconstant")
    k = 0
    while True:
        q, r = divmod(p, base)
        if not r.is_zero():
            return k
        p = q
        k += 1


def x_valuation(p: Poly) -> int:
    """Multiplicity of the root 0, read off the coefficient list."""
    if p.is_zero():
        raise ValueError("valuation of the zero polynomial")
    k = 0
    while p.field.is_zero(p.coeffs[k]):
        k += 1
    return k
