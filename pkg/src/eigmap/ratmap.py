"""Rational change of variable x = n(y)/d(y) and its substitution
operator on polynomials and polynomial matrices.

For a polynomial p of grade g the image is sum a_i n^i d^(g-i), the
denominator-cleared substitution; for a matrix the operator acts
entrywise with the matrix grade, and the image carries grade g*G where
G = max(deg n, deg d).  The module also computes preimage sets of
points (including infinity, with multiplicities) and their grouped
form for irreducible characteristic-value bases over non-closed
fields.
"""

from dataclasses import dataclass
from enum import Enum

from .factorization import Factorization, factor_irreducible, is_irreducible
from .fields import require_same_field
from .poly import Poly, poly_gcd
from .polymat import PolyMatrix

INFINITY = "inf"


@dataclass(frozen=True, order=True)
class CharPoint:
    """A characteristic-value location: a monic irreducible base
    polynomial, or the point at infinity (base None).

    Degree-1 bases x - c stand for the field element c.
    """

    sort_index: tuple
    base: Poly | None

    @classmethod
    def infinity(cls):
        return cls(sort_index=(1, 0, ()), base=None)

    @classmethod
    def finite(cls, base: Poly):
        base = base.monic()
        if base.degree < 1:
            raise ValueError("a finite characteristic point needs a nonconstant base")
        key = (0, base.degree, tuple(base.field.sort_key(c) for c in base.coeffs))
        return cls(sort_index=key, base=base)

    @classmethod
    def from_value(cls, field, value):
        value = field.coerce(value)
        return cls.finite(Poly(field, [field.neg(value), field.one]))

    @property
    def is_infinite(self) -> bool:
        return self.base is None

    @property
    def degree(self) -> int:
        return 0 if self.base is None else self.base.degree

    def root_value(self):
        """The field element for a degree-1 base x - c."""
        if self.base is None or self.base.degree != 1:
            raise ValueError("not a degree-1 point")
        return self.base.field.neg(self.base.coeff(0))

    def __repr__(self):
        if self.base is None:
            return "CharPoint(inf)"
        from .parsing import poly_to_str

        return f"CharPoint({poly_to_str(self.base)})"


class RationalMap:
    """Coprime numerator/denominator pair defining x = n(y)/d(y)."""

    __slots__ = ("field", "n", "d", "N", "D", "G")

    def __init__(self, n: Poly, d: Poly):
        require_same_field(n.field, d.field)
        if n.is_zero() or d.is_zero():
            raise ValueError("numerator and denominator must be nonzero")
        if poly_gcd(n, d).degree != 0:
            raise ValueError("numerator and denominator must be coprime")
        self.field = n.field
        self.n = n
        self.d = d
        self.N = n.degree
        self.D = d.degree
        self.G = max(self.N, self.D)
        if self.G < 1:
            raise ValueError("a constant map has no substitution action")

    @property
    def lead_n(self):
        """Coefficient of y^G in n (zero when deg n < G)."""
        return self.n.coeff(self.G)

    @property
    def lead_d(self):
        return self.d.coeff(self.G)

    def is_mobius(self) -> bool:
        return self.G == 1

    def value_at(self, y0):
        """x(y0) as a field element, or INFINITY when d(y0) = 0."""
        dv = self.d.evaluate(y0)
        if self.field.is_zero(dv):
            return INFINITY
        return self.field.div(self.n.evaluate(y0), dv)

    def __eq__(self, other):
        return (
            isinstance(other, RationalMap)
            and self.n == other.n
            and self.d == other.d
        )

    def __hash__(self):
        return hash((self.n, self.d))

    def __repr__(self):
        from .parsing import poly_to_str

        return f"RationalMap(({poly_to_str(self.n, 'y')})/({poly_to_str(self.d, 'y')}))"


def new_map(n: Poly, d: Poly) -> RationalMap:
    return RationalMap(n, d)


def psi_dual(m: RationalMap) -> RationalMap:
    """The companion map with numerator and denominator swapped; it
    carries the structure at infinity."""
    return RationalMap(m.d, m.n)


def phi_scalar(p: Poly, g: int, m: RationalMap) -> Poly:
    """Denominator-cleared substitution of a scalar polynomial of grade g."""
    if g < p.degree:
        raise ValueError(f"grade {g} below degree {p.degree}")
    field = p.field
    require_same_field(field, m.field)
    acc = Poly.zero(field)
    npow = Poly.one(field)
    dpows = [Poly.one(field)]
    for _ in range(g):
        dpows.append(dpows[-1] * m.d)
    for i in range(g + 1):
        c = p.coeff(i)
        if not field.is_zero(c):
            acc = acc + (npow * dpows[g - i]).scale(c)
        if i < g:
            npow = npow * m.n
    return acc


def phi_matrix(P: PolyMatrix, m: RationalMap) -> PolyMatrix:
    """Entrywise substitution with the matrix grade; the image gets
    grade g*G."""
    g = P.grade
    out = [[phi_scalar(e, g, m) for e in row] for row in P.entries]
    return PolyMatrix(P.field, out, g * m.G)


class DegreeDropReason(Enum):
    EXACT = "exact"
    NUMERATOR_DOMINANT_GRADE_SLACK = "numerator-dominant-grade-slack"
    FACTOR_AT_CRITICAL_VALUE = "factor-at-critical-value"


@dataclass(frozen=True)
class DegreeBoundReport:
    """Predicted degree data for the image of a matrix, derived without
    forming the image."""

    q: int
    attained: bool
    reason: DegreeDropReason
    critical_value: object = None


def degree_bound(P: PolyMatrix, m: RationalMap) -> DegreeBoundReport:
    """Sharp degree bookkeeping for the image of P.

    q is the support-aware bound g*D + max i*(N - D) over matrix
    coefficients P_i != 0; the image degree equals g*G exactly unless
    either the numerator dominates and the grade exceeds the degree,
    or every entry is divisible by (x - xhat) for the critical value
    xhat determined by the map.
    """
    if P.is_zero():
        raise ValueError("degree bound of the zero matrix")
    g, k = P.grade, P.degree
    support = set()
    for row in P.entries:
        for e in row:
            for i, c in enumerate(e.coeffs):
                if not P.field.is_zero(c):
                    support.add(i)
    q = g * m.D + max(i * (m.N - m.D) for i in support)
    if m.N > m.D:
        if g > k:
            return DegreeBoundReport(
                q, False, DegreeDropReason.NUMERATOR_DOMINANT_GRADE_SLACK
            )
        return DegreeBoundReport(q, True, DegreeDropReason.EXACT)
    xhat = (
        P.field.div(m.lead_n, m.lead_d) if m.N == m.D else P.field.zero
    )
    from .polymat import eval_matrix

    vanishes = all(
        P.field.is_zero(v) for row in eval_matrix(P, xhat) for v in row
    )
    if vanishes:
        return DegreeBoundReport(
            q, False, DegreeDropReason.FACTOR_AT_CRITICAL_VALUE, xhat
        )
    return DegreeBoundReport(q, True, DegreeDropReason.EXACT, xhat)


@dataclass(frozen=True)
class PreimageSet:
    """Preimage of a point under the map, with multiplicities.

    The finite part is the factorization of the monic normalization of
    alpha*d - beta*n; infinity joins with multiplicity G - S whenever
    that polynomial has degree S < G.  Multiplicities always sum to G.
    """

    target: CharPoint
    entries: tuple
    S: int
    includes_infinity: bool

    def multiplicity_of(self, point: CharPoint) -> int:
        for pt, mult in self.entries:
            if pt == point:
                return mult
        return 0

    def total_multiplicity(self) -> int:
        return sum(mult * pt.degree for pt, mult in self.entries if not pt.is_infinite) + sum(
            mult for pt, mult in self.entries if pt.is_infinite
        )


def _preimage_from_poly(m: RationalMap, target: CharPoint, w: Poly) -> PreimageSet:
    S = w.degree
    entries = []
    if S >= 1:
        fac = factor_irreducible(w)
        for base, exp in fac.factors:
            entries.append((CharPoint.finite(base), exp))
    includes_infinity = S < m.G
    if includes_infinity:
        entries.append((CharPoint.infinity(), m.G - S))
    return PreimageSet(
        target=target,
        entries=tuple(entries),
        S=S,
        includes_infinity=includes_infinity,
    )


def preimage_set(m: RationalMap, x0) -> PreimageSet:
    """Preimage of a field element or INFINITY, from the pencil
    alpha*d - beta*n with (alpha, beta) = (x0, 1) or (1, 0)."""
    field = m.field
    if x0 == INFINITY:
        return _preimage_from_poly(m, CharPoint.infinity(), m.d)
    x0 = field.coerce(x0)
    w = m.d.scale(x0) - m.n
    if w.is_zero():
        raise AssertionError("coprime map cannot satisfy x0*d = n identically")
    return _preimage_from_poly(m, CharPoint.from_value(field, x0), w)


@dataclass(frozen=True)
class GroupedPreimage:
    """Irreducible factorization of the image of a characteristic-value
    base, plus the multiplicity picked up at infinity."""

    base: CharPoint
    factorization: Factorization
    infinity_multiplicity: int

    def finite_parts(self):
        return self.factorization.factors


def grouped_preimage(m: RationalMap, q: Poly, *, validate: bool = True) -> GroupedPreimage:
    """Group the preimages of all roots of an irreducible base q: the
    factors of the image of q, and an infinity part exactly when the
    image degree drops below deg(q) * G (possible only for linear q)."""
    if q.degree < 1:
        raise ValueError("base must be nonconstant")
    if validate and not is_irreducible(q):
        raise ValueError("base must be irreducible")
    image = phi_scalar(q, q.degree, m)
    fac = factor_irreducible(image)
    inf_mult = q.degree * m.G - fac.total_degree()
    return GroupedPreimage(
        base=CharPoint.finite(q),
        factorization=fac,
        infinity_multiplicity=inf_mult,
    )


def preimage_of_charpoint(m: RationalMap, point: CharPoint):
    """Uniform preimage data for any x-side base, infinity included.

    Returns (list of (CharPoint, multiplicity) finite pairs, infinity
    multiplicity).
    """
    if point.is_infinite:
        pre = preimage_set(m, INFINITY)
        finite = [(pt, mult) for pt, mult in pre.entries if not pt.is_infinite]
        inf_mult = next(
            (mult for pt, mult in pre.entries if pt.is_infinite), 0
        )
        return finite, inf_mult
    grouped = grouped_preimage(m, point.base, validate=False)
    finite = [
        (CharPoint.finite(base), exp) for base, exp in grouped.finite_parts()
    ]
    return finite, grouped.infinity_multiplicity


def mobius_inverse(m: RationalMap) -> RationalMap:
    """Invert a degree-1 map (a*y + b)/(c*y + e) into (b - e*x)/(c*x - a)."""
    if m.G != 1:
        raise ValueError("only degree-1 maps are invertible")
    field = m.field
    a, b = m.n.coeff(1), m.n.coeff(0)
    c, e = m.d.coeff(1), m.d.coeff(0)
    det = field.sub(field.mul(a, e), field.mul(b, c))
    if field.is_zero(det):
        raise ValueError("degenerate map: zero determinant")
    inv_n = Poly(field, [b, field.neg(e)])
    inv_d = Poly(field, [field.neg(a), c])
    return RationalMap(inv_n, inv_d)
