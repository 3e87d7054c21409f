"""Exact coefficient fields: the rationals and prime fields GF(p).

Field elements are plain Python values (Fraction for the rationals,
small nonnegative ints for GF(p)); a field object supplies the
arithmetic.  Everything is exact, nothing is ever rounded.
"""

from fractions import Fraction


class FieldError(ValueError):
    pass


class FieldMismatchError(FieldError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class RationalField:
    """The field of rational numbers with Fraction elements."""

    name = "Q"
    characteristic = 0

    def coerce(self, v) -> Fraction:
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        raise FieldError(f"cannot coerce {v!r} into Q")

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def from_fraction(self, num: int, den: int) -> Fraction:
        if den == 0:
            raise FieldError("zero denominator")
        return Fraction(num, den)

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def is_zero(self, a) -> bool:
        return a == 0

    def to_str(self, a) -> str:
        return str(a)

    def sort_key(self, a):
        return a

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) for prime p, with elements the least nonnegative residues."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p
        self.name = f"Fp:{p}"
        self.characteristic = p
        self.zero = 0
        self.one = 1 % p

    def coerce(self, v) -> int:
        if isinstance(v, int):
            return v % self.p
        if isinstance(v, Fraction):
            return self.from_fraction(v.numerator, v.denominator)
        raise FieldError(f"cannot coerce {v!r} into GF({self.p})")

    def from_int(self, n: int) -> int:
        return n % self.p

    def from_fraction(self, num: int, den: int) -> int:
        if den == 0:
            raise FieldError("zero denominator")
        if den % self.p == 0:
            raise FieldError(f"denominator {den} is not invertible mod {self.p}")
        return num * pow(den, -1, self.p) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a % self.p == 0

    def to_str(self, a) -> str:
        return str(a % self.p)

    def sort_key(self, a):
        return a % self.p

    def elements(self):
        return range(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_name(name: str):
    """Resolve a field label: "Q" or "Fp:<prime>"."""
    name = name.strip()
    if name == "Q":
        return QQ
    if name.startswith("Fp:"):
        try:
            p = int(name[3:])
        except ValueError:
            raise FieldError(f"bad prime in field label {name!r}") from None
        return PrimeField(p)
    raise FieldError(f"unsupported field label {name!r}")


def require_same_field(fa, fb):
    if fa != fb:
        raise FieldMismatchError(f"field mismatch: {fa!r} vs {fb!r}")
