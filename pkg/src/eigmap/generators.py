"""Seeded random instances for differential testing.

Everything is driven by a caller-supplied random.Random, so suites are
reproducible bit for bit.  Instance families are chosen so that blind
factorization stays inside its work bounds: structured matrices have
divisor bases of degree at most two, and dense square matrices are
kept small enough that determinant factors remain desk-sized.
"""

from fractions import Fraction

from .factorization import is_irreducible
from .fields import QQ, PrimeField
from .poly import Poly, poly_gcd
from .polymat import PolyMatrix
from .ratmap import RationalMap


def random_scalar(field, rng, nonzero=False):
    if isinstance(field, PrimeField):
        lo = 1 if nonzero else 0
        return rng.randrange(lo, field.p) if field.p > lo else field.one
    while True:
        v = Fraction(rng.randint(-3, 3))
        if rng.random() < 0.15:
            v = v / 2
        if not nonzero or v != 0:
            return v


def random_poly(field, rng, max_deg, nonzero=False, monic=False):
    deg = rng.randint(0, max_deg)
    coeffs = [random_scalar(field, rng) for _ in range(deg + 1)]
    if monic:
        coeffs[-1] = field.one
    p = Poly(field, coeffs)
    if nonzero and p.is_zero():
        return random_poly(field, rng, max_deg, nonzero=True, monic=monic)
    return p


def random_matrix(field, rng, rows, cols, max_deg, grade=None):
    entries = [
        [random_poly(field, rng, max_deg) for _ in range(cols)] for _ in range(rows)
    ]
    M = PolyMatrix(field, entries)
    if grade is not None:
        M = M.with_grade(max(grade, M.degree))
    return M


def random_constant_invertible(field, rng, n):
    from . import linalg

    while True:
        rows = [[random_scalar(field, rng) for _ in range(n)] for _ in range(n)]
        if linalg.rank(field, rows) == n:
            return PolyMatrix.from_scalar_rows(field, rows)


def random_unimodular(field, rng, n, ops=None, max_op_deg=1):
    """Product of elementary row operations applied to the identity."""
    U = PolyMatrix.identity(field, n)
    entries = [list(row) for row in U.entries]
    if ops is None:
        ops = n + 2
    for _ in range(ops):
        kind = rng.choice(("add", "swap", "scale"))
        if kind == "add" and n >= 2:
            i, j = rng.sample(range(n), 2)
            q = random_poly(field, rng, max_op_deg)
            entries[i] = [a + q * b for a, b in zip(entries[i], entries[j])]
        elif kind == "swap" and n >= 2:
            i, j = rng.sample(range(n), 2)
            entries[i], entries[j] = entries[j], entries[i]
        else:
            i = rng.randrange(n)
            c = random_scalar(field, rng, nonzero=True)
            entries[i] = [e.scale(c) for e in entries[i]]
    return PolyMatrix(field, entries)


def random_irreducible(field, rng, max_deg=2):
    """A random monic irreducible of degree 1 or 2."""
    deg = 1 if max_deg < 2 or rng.random() < 0.6 else 2
    while True:
        p = random_poly(field, rng, deg, monic=True)
        if p.degree != deg:
            continue
        if deg == 1 or is_irreducible(p):
            return p


def random_coprime_map(field, rng, max_G, shape=None) -> RationalMap:
    """Random substitution map with G <= max_G.

    shape: None for anything, or one of "equal", "num", "den" to force
    deg n = deg d, deg n > deg d, deg n < deg d.
    """
    while True:
        G = rng.randint(1, max_G)
        if shape == "equal":
            dn = dd = G
        elif shape == "num":
            dn, dd = G, rng.randint(0, G - 1)
        elif shape == "den":
            dn, dd = rng.randint(0, G - 1), G
        else:
            dn = rng.randint(0, G)
            dd = rng.randint(0, G)
            if max(dn, dd) != G:
                continue
        n = random_poly(field, rng, dn)
        d = random_poly(field, rng, dd)
        if n.is_zero() or d.is_zero():
            continue
        if n.degree != dn or d.degree != dd:
            continue
        if max(n.degree, d.degree) < 1:
            continue
        if poly_gcd(n, d).degree != 0:
            continue
        return RationalMap(n, d)


def random_structured_matrix(
    field,
    rng,
    rows,
    cols,
    max_chain_degree=3,
    extra_base=None,
    grade_slack=0,
):
    """Matrix with a controlled invariant-polynomial chain.

    Builds a diagonal divisibility chain from degree <= 2 irreducible
    bases (plus an optional extra base, used to engineer structure at
    specific points), possibly rank deficient, then conjugates by
    constant invertible matrices so divisor bases stay small.
    """
    nu = min(rows, cols)
    rank = rng.randint(0, nu)
    pool = [random_irreducible(field, rng) for _ in range(rng.randint(1, 2))]
    if extra_base is not None:
        pool.append(extra_base)
    chain = []
    current = Poly.one(field)
    budget = max_chain_degree
    for _ in range(rank):
        extra = Poly.one(field)
        if budget > 0 and rng.random() < 0.7:
            base = rng.choice(pool)
            e = rng.randint(1, max(1, budget // base.degree))
            e = min(e, 2)
            if base.degree * e <= budget:
                extra = base**e
                budget -= base.degree * e
        current = current * extra
        chain.append(current)
    z = Poly.zero(field)
    entries = [[z] * cols for _ in range(rows)]
    for i, d in enumerate(chain):
        entries[i][i] = d
    D = PolyMatrix(field, entries)
    L = random_constant_invertible(field, rng, rows)
    R = random_constant_invertible(field, rng, cols)
    P = (L @ D) @ R
    return P.with_grade(P.degree + grade_slack)


def random_verify_instance(field, rng, max_rows=3, max_cols=4, max_deg=3, max_G=3):
    """A (P, map) pair for the structure-mapping suite, mixing dense,
    structured, and engineered shapes, with degrees that keep every
    blind factorization inside its work bounds."""
    style = rng.random()
    shape = rng.choice((None, None, "equal", "num", "den"))
    m = random_coprime_map(field, rng, max_G, shape=shape)
    rows = rng.randint(1, max_rows)
    cols = rng.randint(1, max_cols)
    if style < 0.35:
        # Dense rectangular: rich minimal indices, light divisor load.
        if rows == cols:
            cols = min(cols + 1, max_cols) if cols < max_cols else cols
            if rows == cols and rows > 1:
                rows -= 1
        P = random_matrix(field, rng, rows, cols, rng.randint(0, max_deg))
        if rng.random() < 0.3:
            P = P.with_grade(P.degree + 1)
        return P, m
    if style < 0.55:
        # Dense square, small enough that determinants factor quickly.
        n = rng.randint(1, 2)
        deg = rng.randint(0, 2 if n == 2 else max_deg)
        P = random_matrix(field, rng, n, n, deg)
        if rng.random() < 0.3:
            P = P.with_grade(P.degree + 1)
        return P, m
    # Structured chain, sometimes engineered for structure at infinity.
    extra_base = None
    roll = rng.random()
    if roll < 0.35 and m.N <= m.D:
        xhat = (
            field.div(m.lead_n, m.lead_d) if m.N == m.D else field.zero
        )
        extra_base = Poly(field, [field.neg(xhat), field.one])
    elif roll < 0.5:
        extra_base = Poly.variable(field)
    grade_slack = 1 if rng.random() < 0.35 else 0
    P = random_structured_matrix(
        field,
        rng,
        rows,
        cols,
        max_chain_degree=max_deg,
        extra_base=extra_base,
        grade_slack=grade_slack,
    )
    return P, m


def random_singular_matrix(field, rng, max_rows=4, max_cols=5, max_deg=3):
    """Matrix with a nontrivial right kernel."""
    if rng.random() < 0.6:
        rows = rng.randint(1, max_rows)
        cols = rng.randint(rows + 1, max_cols) if rows < max_cols else max_cols
        return random_matrix(field, rng, rows, cols, rng.randint(0, max_deg))
    # Rank-deficient by construction: an outer product of thin factors.
    rows = rng.randint(2, max_rows)
    cols = rng.randint(2, max_cols)
    inner = rng.randint(1, min(rows, cols) - 1)
    A = random_matrix(field, rng, rows, inner, 1)
    B = random_matrix(field, rng, inner, cols, max(0, max_deg - 1))
    return A @ B


def random_mobius_map(field, rng) -> RationalMap:
    while True:
        n = random_poly(field, rng, 1)
        d = random_poly(field, rng, 1)
        if n.is_zero() or d.is_zero() or max(n.degree, d.degree) != 1:
            continue
        if poly_gcd(n, d).degree != 0:
            continue
        return RationalMap(n, d)
