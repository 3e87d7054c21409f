"""Squarefree decomposition and factorization into monic irreducibles.

Over the rationals the splitting engine is Kronecker's interpolation
search on a primitive integer polynomial: a degree-d factor is pinned
down by its values at d+1 integer points, and those values must divide
the corresponding values of the input.  Over GF(p) the engine is
exhaustive trial division by monic polynomials of ascending degree.

Both engines are exact but exponential, so blind searches are guarded
by explicit work bounds (degree 12, p <= 97, and a candidate-count
cap).  A Frobenius degree-pattern filter (the multiset of irreducible
factor degrees of a squarefree polynomial, read off gcds with
x^(p^k) - x) is used to skip impossible factor degrees and to certify
irreducibility early; the search itself is still interpolation /
trial division.  Callers that already know candidate factors can pass
them as hints, which are peeled off by exact division before any
blind search runs.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd as int_gcd
from math import lcm as int_lcm

from .fields import QQ, PrimeField, RationalField
from .poly import Poly, poly_gcd, valuation, x_valuation

BLIND_DEGREE_LIMIT = 12
PRIME_LIMIT = 97
_TRIAL_DIVISION_CAP = 3_000_000
_KRONECKER_TUPLE_CAP = 20_000_000
_SIEVE_PRIMES = (3, 5, 7, 11, 13)


class FactorizationLimitError(ValueError):
    """Input exceeds the supported blind-factorization bounds."""


@dataclass(frozen=True)
class Factorization:
    """unit * prod(base^exponent), bases monic irreducible and distinct."""

    field: object
    unit: object
    factors: tuple

    def expand(self) -> Poly:
        acc = Poly.constant(self.field, self.unit)
        for base, exp in self.factors:
            acc = acc * base**exp
        return acc

    def is_irreducible(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    def total_degree(self) -> int:
        return sum(base.degree * exp for base, exp in self.factors)


def factor_sort_key(p: Poly):
    return (p.degree, tuple(p.field.sort_key(c) for c in p.coeffs))


def squarefree_decompose(p: Poly):
    """Yun's algorithm: returns (unit, [(monic squarefree base, exponent)]).

    Over GF(p) the characteristic must exceed the degree, which rules
    out vanishing derivatives of nontrivial factors.
    """
    if p.is_zero():
        raise ValueError("cannot decompose the zero polynomial")
    field = p.field
    if isinstance(field, PrimeField) and field.p <= p.degree:
        raise FactorizationLimitError(
            f"squarefree decomposition needs characteristic > degree "
            f"(p={field.p}, degree={p.degree})"
        )
    unit = p.leading_coeff
    f = p.monic()
    if f.degree == 0:
        return unit, []
    out = []
    fp = f.derivative()
    a = poly_gcd(f, fp)
    b = f.exact_div(a)
    c = fp.exact_div(a) - b.derivative()
    i = 1
    while b.degree >= 1:
        g = poly_gcd(b, c) if not c.is_zero() else b.monic()
        if g.degree >= 1:
            out.append((g, i))
        b = b.exact_div(g)
        c = c.exact_div(g) - b.derivative()
        i += 1
    return unit, out


def _pow_mod(base: Poly, exponent: int, modulus: Poly) -> Poly:
    result = Poly.one(base.field)
    base = base % modulus
    while exponent:
        if exponent & 1:
            result = (result * base) % modulus
        base = (base * base) % modulus
        exponent >>= 1
    return result


def frobenius_degree_pattern(f: Poly):
    """Multiset of irreducible factor degrees of a monic f over GF(p),
    or None when f is not squarefree (the pattern is then unreliable)."""
    field = f.field
    if f.degree < 1:
        return []
    deriv = f.derivative()
    if deriv.is_zero() or poly_gcd(f, deriv).degree > 0:
        return None
    x = Poly.variable(field)
    pattern = []
    g = f
    h = x % g
    k = 0
    while g.degree >= 1:
        k += 1
        if 2 * k > g.degree:
            pattern.append(g.degree)
            break
        h = _pow_mod(h, field.p, g)
        diff = h - (x % g)
        d = g if diff.is_zero() else poly_gcd(diff, g)
        if d.degree > 0:
            pattern.extend([k] * (d.degree // k))
            g = g.exact_div(d)
            h = h % g
    return sorted(pattern)


def _subset_sums(degrees) -> set:
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


# ---------------------------------------------------------------------------
# GF(p): exhaustive trial division on raw coefficient lists.


def _fp_divide(num, den, p):
    """Exact division of int coefficient lists mod p; None if inexact."""
    if len(num) < len(den):
        return None
    rem = list(num)
    dd = len(den) - 1
    lead_inv = pow(den[-1], -1, p)
    quo = [0] * (len(rem) - dd)
    for i in range(len(rem) - dd - 1, -1, -1):
        c = rem[i + dd] * lead_inv % p
        if c:
            quo[i] = c
            for j, bc in enumerate(den):
                if bc:
                    rem[i + j] = (rem[i + j] - c * bc) % p
    if any(rem[:dd]):
        return None
    return quo


def _factor_monic_fp(f: Poly):
    """Factor a monic polynomial over GF(p) by ascending trial division."""
    field = f.field
    p = field.p
    out = []
    v = x_valuation(f)
    if v:
        out.append((Poly.variable(field), v))
        f = Poly(field, f.coeffs[v:])
    if f.degree < 1:
        return out
    candidates = None
    pattern = frobenius_degree_pattern(f)
    if pattern is not None:
        if pattern == [f.degree]:
            out.append((f, 1))
            return out
        candidates = _subset_sums(pattern)
    if p > PRIME_LIMIT:
        raise FactorizationLimitError(
            f"blind factorization limited to p <= {PRIME_LIMIT}, got {p}"
        )
    if candidates is None and f.degree > BLIND_DEGREE_LIMIT:
        raise FactorizationLimitError(
            f"blind factorization over GF({p}) limited to degree "
            f"{BLIND_DEGREE_LIMIT}, got {f.degree}"
        )
    search = [
        d
        for d in range(1, f.degree // 2 + 1)
        if candidates is None or d in candidates
    ]
    if sum(p**d for d in search) > _TRIAL_DIVISION_CAP:
        raise FactorizationLimitError(
            f"trial-division search over GF({p}) too large for degree {f.degree}"
        )
    coeffs = [int(c) for c in f.coeffs]
    d = 1
    while 2 * d <= len(coeffs) - 1:
        if candidates is not None and d not in candidates:
            d += 1
            continue
        for tail in itertools.product(range(p), repeat=d):
            den = list(tail) + [1]
            exp = 0
            while True:
                quo = _fp_divide(coeffs, den, p)
                if quo is None:
                    break
                coeffs = quo
                exp += 1
            if exp:
                out.append((Poly(field, den), exp))
                if 2 * d > len(coeffs) - 1:
                    break
        d += 1
    if len(coeffs) - 1 >= 1:
        out.append((Poly(field, coeffs), 1))
    return out


# ---------------------------------------------------------------------------
# Rationals: rational-root peeling plus Kronecker interpolation search,
# pruned by factor-degree patterns modulo small primes.


def _primitive_int_coeffs(f: Poly):
    """Scale a nonzero rational polynomial to a primitive int list with
    positive leading coefficient."""
    den = int_lcm(*[c.denominator for c in f.coeffs])
    ints = [int(c * den) for c in f.coeffs]
    content = 0
    for c in ints:
        content = int_gcd(content, abs(c))
    ints = [c // content for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _int_divisors(n: int):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _eval_int(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _rational_root_peel(f: Poly):
    """Split off all monic linear factors of a squarefree rational f."""
    field = f.field
    linear = []
    v = x_valuation(f)
    if v:
        linear.extend([Poly.variable(field)] * v)
        f = Poly(field, f.coeffs[v:])
    if f.degree < 1:
        return linear, f
    ints = _primitive_int_coeffs(f)
    roots = []
    for num in _int_divisors(ints[0]):
        for den in _int_divisors(ints[-1]):
            if int_gcd(num, den) != 1:
                continue
            for sign in (1, -1):
                r = Fraction(sign * num, den)
                if f.evaluate(r) == 0:
                    roots.append(r)
    for r in sorted(roots):
        base = Poly(field, [-r, field.one])
        linear.append(base)
        f = f.exact_div(base)
    return linear, f


def _q_degree_candidates(ints):
    """Intersect factor-degree subset sums over small good primes.

    Returns a set of plausible proper factor degrees, possibly empty
    (which certifies irreducibility), or None when no prime helped.
    """
    n = len(ints) - 1
    candidates = None
    for p in _SIEVE_PRIMES:
        if ints[-1] % p == 0:
            continue
        field = PrimeField(p)
        fp = Poly(field, [c % p for c in ints])
        pattern = frobenius_degree_pattern(fp)
        if pattern is None:
            continue
        sums = _subset_sums(pattern)
        candidates = sums if candidates is None else (candidates & sums)
        if not candidates - {0, n}:
            break
    if candidates is None:
        return None
    return {d for d in candidates if 1 <= d <= n // 2}


def _kronecker_find_factor(ints, degrees):
    """Search for one integer factor with degree in the given set."""
    points_pool = [0]
    for k in range(1, 8):
        points_pool.extend([k, -k])
    values = {pt: _eval_int(ints, pt) for pt in points_pool}
    if any(v == 0 for v in values.values()):
        raise AssertionError("integer root survived the rational-root peel")
    for d in sorted(degrees):
        pts = sorted(points_pool, key=lambda pt: (abs(values[pt]), abs(pt)))[: d + 1]
        pts.sort()
        divisor_lists = []
        total = 1
        for idx, pt in enumerate(pts):
            divs = _int_divisors(values[pt])
            if idx > 0:
                divs = [s * dd for dd in divs for s in (1, -1)]
            divisor_lists.append(divs)
            total *= len(divs)
        if total > _KRONECKER_TUPLE_CAP:
            raise FactorizationLimitError(
                f"Kronecker search space too large ({total} candidate tuples)"
            )
        # Lagrange basis over the chosen points, cleared to a common
        # integer denominator so candidate checks stay in int arithmetic.
        basis = []
        for j, pj in enumerate(pts):
            num = Poly.one(QQ)
            den = 1
            for i, pi in enumerate(pts):
                if i == j:
                    continue
                num = num * Poly(QQ, [-pi, 1])
                den *= pj - pi
            basis.append([c / den for c in num.coeffs])
        common = int_lcm(*[c.denominator for row in basis for c in row])
        int_basis = [[int(c * common) for c in row] for row in basis]
        lead_col = [row[d] for row in int_basis]
        lc_f = ints[-1]
        for tup in itertools.product(*divisor_lists):
            lead = sum(v * b for v, b in zip(tup, lead_col))
            if lead == 0 or lead % common:
                continue
            lead //= common
            if lc_f % lead:
                continue
            cand = [0] * (d + 1)
            for v, row in zip(tup, int_basis):
                for i, b in enumerate(row):
                    cand[i] += v * b
            ok = True
            for i in range(d + 1):
                if cand[i] % common:
                    ok = False
                    break
            if not ok:
                continue
            cand = [c // common for c in cand]
            quo = _int_poly_divide(ints, cand)
            if quo is not None:
                return cand, quo
    return None


def _int_poly_divide(num, den):
    """Exact division of integer coefficient lists; None if inexact."""
    if den[-1] == 0 or len(num) < len(den):
        return None
    rem = list(num)
    dd = len(den) - 1
    quo = [0] * (len(rem) - dd)
    for i in range(len(rem) - dd - 1, -1, -1):
        if rem[i + dd] % den[-1]:
            return None
        c = rem[i + dd] // den[-1]
        quo[i] = c
        if c:
            for j, bc in enumerate(den):
                rem[i + j] -= c * bc
    if any(rem[:dd]):
        return None
    return quo


def _factor_int_squarefree(ints):
    """Irreducible integer factors of a squarefree integer polynomial."""
    n = len(ints) - 1
    if n <= 1:
        return [ints]
    candidates = _q_degree_candidates(ints)
    if candidates is not None and not candidates:
        return [ints]
    if candidates is None:
        if n > BLIND_DEGREE_LIMIT:
            raise FactorizationLimitError(
                f"blind factorization over Q limited to degree "
                f"{BLIND_DEGREE_LIMIT}, got {n}"
            )
        candidates = set(range(2, n // 2 + 1))
    hit = _kronecker_find_factor(ints, candidates)
    if hit is None:
        return [ints]
    g, h = hit
    return _factor_int_squarefree(g) + _factor_int_squarefree(h)


def _factor_monic_squarefree_q(f: Poly):
    """Monic irreducible factors of a monic squarefree rational f."""
    linear, f = _rational_root_peel(f)
    out = list(linear)
    if f.degree >= 1:
        ints = _primitive_int_coeffs(f)
        for g in _factor_int_squarefree(ints):
            out.append(Poly(QQ, g).monic())
    return out


# ---------------------------------------------------------------------------


@lru_cache(maxsize=8192)
def _factor_monic_cached(f: Poly):
    field = f.field
    counts = {}
    if isinstance(field, RationalField):
        _, parts = squarefree_decompose(f)
        for part, e in parts:
            for q in _factor_monic_squarefree_q(part):
                counts[q] = counts.get(q, 0) + e
    else:
        for q, e in _factor_monic_fp(f):
            counts[q] = counts.get(q, 0) + e
    return tuple(sorted(counts.items(), key=lambda be: factor_sort_key(be[0])))


def factor_irreducible(p: Poly, hints=()) -> Factorization:
    """Complete factorization into monic irreducibles over the field.

    hints: known monic irreducible candidates, peeled off by exact
    division before the blind engines run.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    unit = p.leading_coeff
    f = p.monic()
    counts = {}
    for h in hints:
        if h.degree < 1 or f.degree < 1:
            continue
        h = h.monic()
        if h in counts:
            continue
        k = valuation(f, h)
        if k:
            counts[h] = k
            f = f.exact_div(h**k)
    if f.degree >= 1:
        for q, e in _factor_monic_cached(f):
            counts[q] = counts.get(q, 0) + e
    factors = tuple(sorted(counts.items(), key=lambda be: factor_sort_key(be[0])))
    return Factorization(field=p.field, unit=unit, factors=factors)


def is_irreducible(p: Poly) -> bool:
    if p.degree < 1:
        return False
    if p.degree == 1:
        return True
    return factor_irreducible(p).is_irreducible()
