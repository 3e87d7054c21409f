"""Smith normal form over F[x] with explicit unimodular transformers,
and the elementary-divisor views derived from it.

The reduction pivots on a lowest-degree entry, clears its row and
column by exact/remainder division steps, and repeats until the matrix
is diagonal.  Divisibility violations between diagonal entries are
then repaired pairwise with a Bezout-based two-by-two transform that
replaces diag(f, h) by diag(gcd, f*h/gcd); a final constant rescaling
makes the invariant polynomials monic.
"""

from dataclasses import dataclass

from .factorization import factor_irreducible
from .poly import Poly, gcd_extended, x_valuation
from .polymat import PolyMatrix, reversal_matrix
from .ratmap import CharPoint


@dataclass(frozen=True)
class SmithDecomposition:
    A: PolyMatrix
    S: PolyMatrix
    B: PolyMatrix
    invariant_polys: tuple

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariant_polys if not d.is_zero())


class _Worker:
    """Mutable elimination state keeping A @ P @ B == S at every step."""

    def __init__(self, P: PolyMatrix):
        self.field = P.field
        self.m, self.p = P.rows, P.cols
        self.S = [list(row) for row in P.entries]
        one, zero = Poly.one(P.field), Poly.zero(P.field)
        self.A = [
            [one if i == j else zero for j in range(self.m)] for i in range(self.m)
        ]
        self.B = [
            [one if i == j else zero for j in range(self.p)] for i in range(self.p)
        ]

    def swap_rows(self, i, j):
        self.S[i], self.S[j] = self.S[j], self.S[i]
        self.A[i], self.A[j] = self.A[j], self.A[i]

    def swap_cols(self, i, j):
        for row in self.S:
            row[i], row[j] = row[j], row[i]
        for row in self.B:
            row[i], row[j] = row[j], row[i]

    def add_row(self, i, j, q: Poly):
        """row_i += q * row_j"""
        self.S[i] = [a + q * b for a, b in zip(self.S[i], self.S[j])]
        self.A[i] = [a + q * b for a, b in zip(self.A[i], self.A[j])]

    def add_col(self, j, i, q: Poly):
        """col_j += q * col_i"""
        for row in self.S:
            row[j] = row[j] + q * row[i]
        for row in self.B:
            row[j] = row[j] + q * row[i]

    def scale_row(self, i, c):
        self.S[i] = [e.scale(c) for e in self.S[i]]
        self.A[i] = [e.scale(c) for e in self.A[i]]

    def mix_rows(self, i, j, u11, u12, u21, u22):
        """rows (i, j) <- U @ rows (i, j) for a 2x2 polynomial U."""
        si, sj = self.S[i], self.S[j]
        self.S[i] = [u11 * a + u12 * b for a, b in zip(si, sj)]
        self.S[j] = [u21 * a + u22 * b for a, b in zip(si, sj)]
        ai, aj = self.A[i], self.A[j]
        self.A[i] = [u11 * a + u12 * b for a, b in zip(ai, aj)]
        self.A[j] = [u21 * a + u22 * b for a, b in zip(ai, aj)]

    def mix_cols(self, i, j, v11, v12, v21, v22):
        """cols (i, j) <- cols (i, j) @ V for a 2x2 polynomial V."""
        for row in self.S:
            a, b = row[i], row[j]
            row[i] = a * v11 + b * v21
            row[j] = a * v12 + b * v22
        for row in self.B:
            a, b = row[i], row[j]
            row[i] = a * v11 + b * v21
            row[j] = a * v12 + b * v22

    def find_pivot(self, t):
        best = None
        where = None
        for i in range(t, self.m):
            for j in range(t, self.p):
                e = self.S[i][j]
                if not e.is_zero() and (best is None or e.degree < best):
                    best = e.degree
                    where = (i, j)
        return where


def smith_form(P: PolyMatrix) -> SmithDecomposition:
    w = _Worker(P)
    field = P.field
    nu = min(w.m, w.p)
    one = Poly.one(field)

    for t in range(nu):
        while True:
            where = w.find_pivot(t)
            if where is None:
                break
            if where != (t, t):
                if where[0] != t:
                    w.swap_rows(t, where[0])
                if where[1] != t:
                    w.swap_cols(t, where[1])
            pivot = w.S[t][t]
            dirty = False
            for i in range(t + 1, w.m):
                if not w.S[i][t].is_zero():
                    q = w.S[i][t] // pivot
                    if not q.is_zero():
                        w.add_row(i, t, -q)
                    if not w.S[i][t].is_zero():
                        dirty = True
            for j in range(t + 1, w.p):
                if not w.S[t][j].is_zero():
                    q = w.S[t][j] // pivot
                    if not q.is_zero():
                        w.add_col(j, t, -q)
                    if not w.S[t][j].is_zero():
                        dirty = True
            if not dirty:
                break
        if w.find_pivot(t) is None:
            break

    # Monic diagonal before the repair passes; the Bezout transform
    # keeps monic entries monic.
    for t in range(nu):
        e = w.S[t][t]
        if not e.is_zero() and e.leading_coeff != field.one:
            w.scale_row(t, field.inv(e.leading_coeff))

    changed = True
    while changed:
        changed = False
        for i in range(nu):
            for j in range(i + 1, nu):
                f, h = w.S[i][i], w.S[j][j]
                if f.is_zero() and not h.is_zero():
                    w.swap_rows(i, j)
                    w.swap_cols(i, j)
                    changed = True
                    continue
                if f.is_zero() or h.is_zero():
                    continue
                if f.divides(h):
                    continue
                r, a, b = gcd_extended(f, h)
                q = h.exact_div(r)
                fr = f.exact_div(r)
                bq = b * q
                w.mix_rows(i, j, one, one, -bq, one - bq)
                w.mix_cols(i, j, a, -q, b, fr)
                changed = True

    invariant = tuple(w.S[t][t] for t in range(nu))
    S = PolyMatrix(field, w.S)
    A = PolyMatrix(field, w.A)
    B = PolyMatrix(field, w.B)
    if not ((A @ P) @ B).same_entries(S):
        raise AssertionError("transformer bookkeeping broke A @ P @ B == S")
    for idx in range(1, nu):
        prev, cur = invariant[idx - 1], invariant[idx]
        if prev.is_zero() and not cur.is_zero():
            raise AssertionError("zero invariant polynomial before a nonzero one")
        if not prev.is_zero() and not cur.is_zero() and not prev.divides(cur):
            raise AssertionError("divisibility chain violated")
    return SmithDecomposition(A=A, S=S, B=B, invariant_polys=invariant)


@dataclass(frozen=True)
class ElementaryDivisors:
    """Exponents of one irreducible base along the invariant-polynomial
    chain; the list is nondecreasing and sits in the last positions."""

    base: CharPoint
    exponents: tuple

    @property
    def total_degree(self) -> int:
        return self.base.degree * sum(self.exponents)


@dataclass(frozen=True)
class ElementaryDivisorList:
    entries: tuple
    rank: int

    def positional_exponents(self, base: CharPoint):
        """Exponents aligned with the nonzero invariant polynomials."""
        for entry in self.entries:
            if entry.base == base:
                pad = self.rank - len(entry.exponents)
                return (0,) * pad + entry.exponents
        return (0,) * self.rank

    def bases(self):
        return [entry.base for entry in self.entries]

    def exponents_of(self, base: CharPoint):
        for entry in self.entries:
            if entry.base == base:
                return entry.exponents
        return ()

    def total_degree(self) -> int:
        return sum(entry.total_degree for entry in self.entries)


def divisors_from_invariants(invariant_polys, hints=()) -> ElementaryDivisorList:
    nonzero = [d for d in invariant_polys if not d.is_zero()]
    rank = len(nonzero)
    by_base = {}
    for pos, d in enumerate(nonzero):
        if d.degree < 1:
            continue
        for base, exp in factor_irreducible(d, hints=hints).factors:
            by_base.setdefault(CharPoint.finite(base), []).append((pos, exp))
    entries = []
    for base in sorted(by_base):
        pairs = by_base[base]
        positions = [pos for pos, _ in pairs]
        exps = tuple(exp for _, exp in pairs)
        if positions != list(range(rank - len(pairs), rank)):
            raise AssertionError("divisor positions are not the chain tail")
        if any(exps[i] > exps[i + 1] for i in range(len(exps) - 1)):
            raise AssertionError("divisor exponents are not nondecreasing")
        entries.append(ElementaryDivisors(base=base, exponents=exps))
    return ElementaryDivisorList(entries=tuple(entries), rank=rank)


def elementary_divisors_finite(P: PolyMatrix, hints=()) -> ElementaryDivisorList:
    return divisors_from_invariants(smith_form(P).invariant_polys, hints=hints)


def exponents_at_base(invariant_polys, base: Poly):
    """Valuations of the nonzero invariant polynomials at a base, by
    repeated division (no factorization)."""
    from .poly import valuation

    out = []
    for d in invariant_polys:
        if d.is_zero():
            continue
        out.append(valuation(d, base) if d.degree >= 1 else 0)
    return tuple(out)


def infinite_exponent_positions(P: PolyMatrix):
    """Valuations at zero of the invariant polynomials of the grade
    reversal, one entry per nonzero invariant polynomial."""
    sd = smith_form(reversal_matrix(P))
    out = []
    for d in sd.invariant_polys:
        if d.is_zero():
            continue
        out.append(x_valuation(d))
    return tuple(out)


def elementary_divisors_infinite(P: PolyMatrix):
    """Exponents of the elementary divisors at infinity, grade-aware."""
    return tuple(v for v in infinite_exponent_positions(P) if v > 0)


def infinite_structure_at_grade(P: PolyMatrix, new_grade: int):
    """Infinite exponents P would carry at a different grade choice.

    The reversal at grade g equals x^(g-k) times the reversal at the
    degree k, so each nonzero invariant polynomial shifts by g - k.
    """
    k = P.degree
    if new_grade < k:
        raise ValueError(f"grade {new_grade} below degree {k}")
    base = infinite_exponent_positions(P.with_grade(k))
    shift = new_grade - k
    return tuple(v + shift for v in base if v + shift > 0)
