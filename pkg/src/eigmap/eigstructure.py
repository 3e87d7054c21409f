"""Complete eigenstructure of a polynomial matrix, root polynomials,
and the bidirectional verifier for the structure-mapping law under a
rational change of variable.

The verifier predicts, from the eigenstructure of P alone, every
elementary divisor and minimal index of the substituted matrix Q
position by position along the invariant-polynomial chain: a base at
a finite point maps through the factorization of its image, the base
at infinity maps through the factors of the denominator, and degree
drops feed the exponents at infinity.  It then computes the
eigenstructure of Q from scratch (its own Smith form, reversal, and
kernel sweeps) and compares, flagging any divisor of Q that the
mapping does not explain.
"""

from dataclasses import dataclass

from . import linalg
from .minbasis import (
    MinimalBasis,
    left_kernel_minimal_basis,
    matvec,
    right_kernel_minimal_basis,
    vector_degree,
)
from .poly import Poly, valuation
from .polymat import PolyMatrix, eval_matrix
from .ratmap import (
    INFINITY,
    CharPoint,
    RationalMap,
    phi_matrix,
    preimage_of_charpoint,
    preimage_set,
)
from .smith import (
    ElementaryDivisorList,
    divisors_from_invariants,
    infinite_exponent_positions,
    smith_form,
)


@dataclass(frozen=True)
class CompleteEigenstructure:
    finite: ElementaryDivisorList
    infinite: tuple
    right_indices: tuple
    left_indices: tuple
    rank: int
    grade: int

    def infinite_positional(self):
        pad = self.rank - len(self.infinite)
        return (0,) * pad + self.infinite

    def index_sum(self) -> int:
        return (
            self.finite.total_degree()
            + sum(self.infinite)
            + sum(self.right_indices)
            + sum(self.left_indices)
        )


def complete_eigenstructure(P: PolyMatrix, factor_hints=()) -> CompleteEigenstructure:
    """Assemble divisors and indices, enforcing the degree-sum identity
    (total divisor degree plus index sums equals grade times rank)."""
    sd = smith_form(P)
    finite = divisors_from_invariants(sd.invariant_polys, hints=factor_hints)
    infinite = tuple(v for v in infinite_exponent_positions(P) if v > 0)
    right = right_kernel_minimal_basis(P).indices
    left = left_kernel_minimal_basis(P).indices
    eig = CompleteEigenstructure(
        finite=finite,
        infinite=infinite,
        right_indices=right,
        left_indices=left,
        rank=sd.rank,
        grade=P.grade,
    )
    if len(right) != P.cols - sd.rank or len(left) != P.rows - sd.rank:
        raise AssertionError("kernel dimensions disagree with the Smith rank")
    if eig.index_sum() != P.grade * sd.rank:
        raise AssertionError(
            f"degree-sum identity violated: {eig.index_sum()} != "
            f"{P.grade} * {sd.rank}"
        )
    return eig


def ker_at_point(P: PolyMatrix, x0):
    """Evaluations at x0 of a minimal kernel basis; these span the
    subspace of eigenvector values that extend to kernel vectors."""
    basis = right_kernel_minimal_basis(P)
    x0 = P.field.coerce(x0)
    return [tuple(p.evaluate(x0) for p in vec) for vec in basis.vectors]


@dataclass(frozen=True)
class RootPolynomial:
    vector: tuple
    point: CharPoint
    order: int


def vector_valuation_at(field, polys, x0) -> int:
    """Order of vanishing at x0 of a nonzero polynomial vector."""
    base = Poly(field, [field.neg(field.coerce(x0)), field.one])
    vals = [valuation(p, base) for p in polys if not p.is_zero()]
    if not vals:
        raise ValueError("zero vector has no vanishing order")
    return min(vals)


def measure_root_polynomial(P: PolyMatrix, vec, x0):
    """Measure the two defining conditions at x0.

    Returns (order, outside): the vanishing order of P @ vec (None
    when P @ vec = 0 identically) and whether vec(x0) lies outside the
    span of the kernel evaluations.  vec is a root polynomial exactly
    when order >= 1 and outside holds.
    """
    field = P.field
    x0 = field.coerce(x0)
    image = matvec(P, vec)
    if all(p.is_zero() for p in image):
        order = None
    else:
        order = vector_valuation_at(field, image, x0)
    kernel_vals = ker_at_point(P, x0)
    value = [p.evaluate(x0) for p in vec]
    outside = not linalg.in_span(field, kernel_vals, value)
    return order, outside


def maximal_root_polynomials(P: PolyMatrix, x0):
    """A maximal independent set of root polynomials at x0, read off
    the Smith decomposition: the transformer columns at the positions
    whose invariant polynomial vanishes at x0, with the corresponding
    exponents as orders."""
    field = P.field
    x0 = field.coerce(x0)
    base = Poly(field, [field.neg(x0), field.one])
    sd = smith_form(P)
    out = []
    for i, d in enumerate(sd.invariant_polys):
        if d.is_zero() or d.degree < 1:
            continue
        ell = valuation(d, base)
        if ell == 0:
            continue
        vec = sd.B.column(i)
        order, outside = measure_root_polynomial(P, vec, x0)
        if order != ell or not outside:
            raise AssertionError(
                "transformer column is not a root polynomial of the "
                "predicted order"
            )
        out.append(
            RootPolynomial(vector=vec, point=CharPoint.from_value(field, x0), order=ell)
        )
    return out


@dataclass(frozen=True)
class RootTransport:
    """Result of pushing a root polynomial through the substitution."""

    vector: tuple
    y_point: CharPoint
    preimage_multiplicity: int
    predicted_order: int
    measured_order: object  # int or None
    outside_kernel: bool

    @property
    def matches(self) -> bool:
        return self.measured_order == self.predicted_order and self.outside_kernel


def transform_root_polynomial(
    P: PolyMatrix, rp: RootPolynomial, m: RationalMap, y0
) -> RootTransport:
    """Candidate root polynomial for the image matrix at a degree-1
    preimage y0 of the original point, built from the local expansion
    coefficients; its order is measured, never assumed."""
    field = P.field
    x0 = rp.point.root_value()
    y0 = field.coerce(y0)
    pre = preimage_set(m, x0)
    m0 = pre.multiplicity_of(CharPoint.from_value(field, y0))
    if m0 == 0:
        raise ValueError("y0 is not a preimage of the root-polynomial point")
    ell = rp.order
    shift = Poly(field, [x0, field.one])
    local = [rp_comp.compose(shift) for rp_comp in rp.vector]
    pencil = m.n - m.d.scale(x0)
    terms = []
    for i in range(ell):
        terms.append(m.d ** (ell - 1 - i) * pencil**i)
    w = []
    for comp in local:
        acc = Poly.zero(field)
        for i in range(ell):
            ci = comp.coeff(i)
            if not field.is_zero(ci):
                acc = acc + terms[i].scale(ci)
        w.append(acc)
    w = tuple(w)
    Q = phi_matrix(P, m)
    measured, outside = measure_root_polynomial(Q, w, y0)
    return RootTransport(
        vector=w,
        y_point=CharPoint.from_value(field, y0),
        preimage_multiplicity=m0,
        predicted_order=m0 * ell,
        measured_order=measured,
        outside_kernel=outside,
    )


# ---------------------------------------------------------------------------
# Theorem verifier.


@dataclass(frozen=True)
class DivisorMappingRecord:
    x_base: object  # CharPoint or None for an unexplained target
    x_exponents: tuple
    y_base: CharPoint
    multiplicity: int
    predicted: tuple
    observed: tuple
    ok: bool
    converse_ok: bool


@dataclass(frozen=True)
class IndexMappingRecord:
    side: str
    p_indices: tuple
    q_indices: tuple
    predicted: tuple
    ok: bool


@dataclass(frozen=True)
class TheoremReport:
    scaling_degree: int
    rank: int
    records: tuple
    index_records: tuple
    unexplained: tuple
    internal_exponents: tuple
    verdict: bool


def _scale_positional(exps, mult):
    return tuple(mult * e for e in exps)


def _converse_ok(observed, mult, x_exps):
    if any(o % mult for o in observed):
        return False
    return tuple(o // mult for o in observed) == tuple(x_exps)


def verify_theorem(P: PolyMatrix, m: RationalMap) -> TheoremReport:
    """Check the full structure mapping between P and its substituted
    image in both directions, from independently computed
    eigenstructures."""
    eigP = complete_eigenstructure(P)
    Q = phi_matrix(P, m)
    rank = eigP.rank
    G = m.G

    x_sources = []
    for entry in eigP.finite.entries:
        x_sources.append((entry.base, eigP.finite.positional_exponents(entry.base)))
    if eigP.infinite:
        x_sources.append((CharPoint.infinity(), eigP.infinite_positional()))

    preimages = {}
    hint_bases = []
    for x_base, _ in x_sources:
        finite_pre, inf_mult = preimage_of_charpoint(m, x_base)
        preimages[x_base] = (finite_pre, inf_mult)
        hint_bases.extend(pt.base for pt, _ in finite_pre)

    eigQ = complete_eigenstructure(Q, factor_hints=tuple(hint_bases))
    if eigQ.rank != rank:
        raise AssertionError("substitution changed the rank")

    records = []
    predicted_bases = set()
    predicted_inf = (0,) * rank
    inf_source = None
    for x_base, x_pos in x_sources:
        x_exps = tuple(e for e in x_pos if e > 0)
        finite_pre, inf_mult = preimages[x_base]
        for y_pt, mult in finite_pre:
            predicted = _scale_positional(x_pos, mult)
            observed = eigQ.finite.positional_exponents(y_pt)
            records.append(
                DivisorMappingRecord(
                    x_base=x_base,
                    x_exponents=x_exps,
                    y_base=y_pt,
                    multiplicity=mult,
                    predicted=predicted,
                    observed=observed,
                    ok=predicted == observed,
                    converse_ok=_converse_ok(observed, mult, x_pos),
                )
            )
            predicted_bases.add(y_pt)
        if inf_mult:
            predicted_inf = tuple(
                a + inf_mult * b for a, b in zip(predicted_inf, x_pos)
            )
            inf_source = (x_base, x_exps, inf_mult, x_pos)

    observed_inf = eigQ.infinite_positional()
    if inf_source is not None:
        x_base, x_exps, inf_mult, x_pos = inf_source
        records.append(
            DivisorMappingRecord(
                x_base=x_base,
                x_exponents=x_exps,
                y_base=CharPoint.infinity(),
                multiplicity=inf_mult,
                predicted=predicted_inf,
                observed=observed_inf,
                ok=predicted_inf == observed_inf,
                converse_ok=_converse_ok(observed_inf, inf_mult, x_pos),
            )
        )

    unexplained = []
    if inf_source is None and any(observed_inf):
        unexplained.append((CharPoint.infinity(), tuple(e for e in observed_inf if e)))
    for entry in eigQ.finite.entries:
        if entry.base not in predicted_bases:
            unexplained.append((entry.base, entry.exponents))

    index_records = []
    for side, p_idx, q_idx in (
        ("right", eigP.right_indices, eigQ.right_indices),
        ("left", eigP.left_indices, eigQ.left_indices),
    ):
        predicted = tuple(G * b for b in p_idx)
        index_records.append(
            IndexMappingRecord(
                side=side,
                p_indices=p_idx,
                q_indices=q_idx,
                predicted=predicted,
                ok=predicted == q_idx,
            )
        )

    sd = smith_form(P)
    nonzero = [d for d in sd.invariant_polys if not d.is_zero()]
    diag_degree = max((d.degree for d in nonzero), default=0)
    internal = tuple(diag_degree - d.degree for d in nonzero)

    verdict = (
        all(r.ok and r.converse_ok for r in records)
        and all(r.ok for r in index_records)
        and not unexplained
    )
    return TheoremReport(
        scaling_degree=G,
        rank=rank,
        records=tuple(records),
        index_records=tuple(index_records),
        unexplained=tuple(unexplained),
        internal_exponents=internal,
        verdict=verdict,
    )


# ---------------------------------------------------------------------------
# Degree-1 maps: the eigenstructure is carried over unchanged.


@dataclass(frozen=True)
class MobiusRoundtripReport:
    exponents_ok: bool
    indices_ok: bool
    roundtrip_ok: bool

    @property
    def verdict(self) -> bool:
        return self.exponents_ok and self.indices_ok and self.roundtrip_ok


def _exponent_multiset(eig: CompleteEigenstructure):
    parts = [entry.exponents for entry in eig.finite.entries]
    if eig.infinite:
        parts.append(tuple(eig.infinite))
    return sorted(parts)


def verify_mobius_roundtrip(P: PolyMatrix, m: RationalMap) -> MobiusRoundtripReport:
    """For a degree-1 map: exponent multisets and minimal indices are
    invariant, and the inverse map restores the eigenstructure
    exactly."""
    if m.G != 1:
        raise ValueError("roundtrip check requires a degree-1 map")
    from .ratmap import mobius_inverse

    eigP = complete_eigenstructure(P)
    Q = phi_matrix(P, m)
    hints = []
    for entry in eigP.finite.entries:
        finite_pre, _ = preimage_of_charpoint(m, entry.base)
        hints.extend(pt.base for pt, _ in finite_pre)
    eigQ = complete_eigenstructure(Q, factor_hints=tuple(hints))
    exponents_ok = _exponent_multiset(eigP) == _exponent_multiset(eigQ)
    indices_ok = (
        eigP.right_indices == eigQ.right_indices
        and eigP.left_indices == eigQ.left_indices
    )
    inv = mobius_inverse(m)
    P2 = phi_matrix(Q, inv)
    back_hints = tuple(entry.base.base for entry in eigP.finite.entries)
    eigP2 = complete_eigenstructure(P2, factor_hints=back_hints)
    roundtrip_ok = eigP2 == eigP
    return MobiusRoundtripReport(
        exponents_ok=exponents_ok,
        indices_ok=indices_ok,
        roundtrip_ok=roundtrip_ok,
    )
