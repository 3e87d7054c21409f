"""Cross-cutting structural checks run against generated instances.

Each check returns a list of human-readable failure strings (empty on
success) so suites can aggregate across instances.  These are the
side conditions the structure-mapping verifier relies on: preimage
coprimality, gcd commutation under substitution, grade-shift behaviour
of the structure at infinity, injectivity of the substitution, and
invariance of local divisor data under multipliers that are
nonsingular at the point.
"""

from .eigstructure import (
    complete_eigenstructure,
    maximal_root_polynomials,
    measure_root_polynomial,
)
from .generators import random_matrix, random_poly, random_scalar
from .minbasis import matvec
from .poly import Poly, poly_gcd
from .polymat import PolyMatrix, determinant, eval_matrix, reversal_matrix
from .ratmap import RationalMap, phi_matrix, phi_scalar
from .smith import exponents_at_base, infinite_structure_at_grade, smith_form
from . import linalg


def check_preimage_coprimality(m: RationalMap, rng):
    failures = []
    field = m.field
    x0 = random_scalar(field, rng)
    x1 = random_scalar(field, rng)
    base0 = Poly(field, [field.neg(x0), field.one])
    img0 = phi_scalar(base0, 1, m)
    if poly_gcd(img0, m.d).degree != 0:
        failures.append(f"image of (x - {x0}) shares a factor with the denominator")
    if x0 != x1:
        w0 = m.d.scale(x0) - m.n
        w1 = m.d.scale(x1) - m.n
        if poly_gcd(w0, w1).degree != 0:
            failures.append(f"preimage pencils of {x0} and {x1} are not coprime")
    return failures


def check_gcd_commutation(m: RationalMap, rng, max_deg=3):
    failures = []
    field = m.field
    p = random_poly(field, rng, max_deg, nonzero=True)
    q = random_poly(field, rng, max_deg, nonzero=True)
    r = poly_gcd(p, q)
    lhs = poly_gcd(
        phi_scalar(p, p.degree, m), phi_scalar(q, q.degree, m)
    )
    rhs = phi_scalar(r, r.degree, m).monic()
    if lhs != rhs:
        failures.append("gcd does not commute with the substitution")
    return failures


def check_grade_shift(P: PolyMatrix, rng):
    from .poly import x_valuation

    failures = []
    for extra in (0, 1, 2):
        g2 = P.degree + extra
        via_shift = infinite_structure_at_grade(P, g2)
        direct = smith_form(reversal_matrix(P.with_grade(g2))).invariant_polys
        observed = tuple(
            x_valuation(d) for d in direct if not d.is_zero() and x_valuation(d) > 0
        )
        if via_shift != observed:
            failures.append(f"grade-shift mismatch at grade {g2}")
    return failures


def check_injectivity(P: PolyMatrix, m: RationalMap, rng):
    failures = []
    other = random_matrix(P.field, rng, P.rows, P.cols, P.grade, grade=P.grade)
    if other.same_entries(P):
        return failures
    if phi_matrix(P, m).same_entries(phi_matrix(other, m)):
        failures.append("substitution identified two distinct matrices")
    return failures


def _regular_nonsingular_at(field, rng, n, x0, max_deg=1):
    for _ in range(50):
        A = random_matrix(field, rng, n, n, max_deg)
        det = determinant(A)
        if det.is_zero():
            continue
        if field.is_zero(det.evaluate(x0)):
            continue
        return A
    return PolyMatrix.identity(field, n)


def check_multiplier_invariance(P: PolyMatrix, rng):
    """Divisor exponents at a point survive multiplication by regular
    matrices whose determinants do not vanish there."""
    failures = []
    field = P.field
    x0 = random_scalar(field, rng)
    A = _regular_nonsingular_at(field, rng, P.rows, x0)
    B = _regular_nonsingular_at(field, rng, P.cols, x0)
    base = Poly(field, [field.neg(x0), field.one])
    lhs = exponents_at_base(smith_form((A @ P) @ B).invariant_polys, base)
    rhs = exponents_at_base(smith_form(P).invariant_polys, base)
    if lhs != rhs:
        failures.append(f"local exponents at {x0} changed under regular multipliers")
    return failures


def check_root_polynomial_equivalence(P: PolyMatrix, rng):
    """Root polynomials correspond through B both ways: measured via
    regular multipliers one way, unimodular multipliers the other."""
    from .generators import random_unimodular

    failures = []
    field = P.field
    x0 = random_scalar(field, rng)
    base = Poly(field, [field.neg(x0), field.one])
    exps = exponents_at_base(smith_form(P).invariant_polys, base)
    if not any(exps):
        return failures

    A = _regular_nonsingular_at(field, rng, P.rows, x0)
    B = _regular_nonsingular_at(field, rng, P.cols, x0)
    APB = (A @ P) @ B
    for rp in maximal_root_polynomials(APB, x0):
        moved = matvec(B, rp.vector)
        order, outside = measure_root_polynomial(P, moved, x0)
        if order != rp.order or not outside:
            failures.append(
                f"root polynomial of order {rp.order} at {x0} did not map through B"
            )

    U = random_unimodular(field, rng, P.rows)
    V = random_unimodular(field, rng, P.cols)
    UPV = (U @ P) @ V
    vinv_cols = _unimodular_inverse(V)
    for rp in maximal_root_polynomials(P, x0):
        pulled = matvec(vinv_cols, rp.vector)
        order, outside = measure_root_polynomial(UPV, pulled, x0)
        if order != rp.order or not outside:
            failures.append(
                f"root polynomial of order {rp.order} at {x0} did not pull back"
            )
    return failures


def _unimodular_inverse(V: PolyMatrix) -> PolyMatrix:
    """Exact inverse of a unimodular matrix via its Smith transformers."""
    sd = smith_form(V)
    # V = A^-1 S B^-1 with S = I up to constants; invert as B S^-1 A.
    field = V.field
    n = V.rows
    inv_diag = []
    for i in range(n):
        d = sd.S.entries[i][i]
        if d.degree != 0:
            raise ValueError("matrix is not unimodular")
        inv_diag.append(Poly.constant(field, field.inv(d.coeff(0))))
    z = Poly.zero(field)
    Sinv = PolyMatrix(
        field,
        [[inv_diag[i] if i == j else z for j in range(n)] for i in range(n)],
    )
    return (sd.B @ Sinv) @ sd.A


def check_index_sum(P: PolyMatrix):
    # complete_eigenstructure raises internally if the identity fails.
    complete_eigenstructure(P)
    return []


def run_structural_checks(P: PolyMatrix, m: RationalMap, rng):
    failures = []
    failures += check_preimage_coprimality(m, rng)
    failures += check_gcd_commutation(m, rng)
    failures += check_grade_shift(P, rng)
    failures += check_injectivity(P, m, rng)
    failures += check_multiplier_invariance(P, rng)
    failures += check_root_polynomial_equivalence(P, rng)
    failures += check_index_sum(P)
    return failures
