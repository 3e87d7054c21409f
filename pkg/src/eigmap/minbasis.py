"""Minimal polynomial bases of matrix kernels and their degree indices.

Kernel vectors of degree at most delta correspond to nullvectors of a
block-Toeplitz coefficient matrix over the base field, so a degree
sweep with exact nullspace computations recovers a minimal basis
without any factorization.  Every returned basis is validated against
the minor criterion (gcd of the maximal minors is 1 and their top
degree equals the basis order), which characterizes minimality.
"""

from dataclasses import dataclass
from itertools import combinations

from . import linalg
from .linalg import IncrementalSpan
from .poly import Poly
from .polymat import PolyMatrix, minor, rank_fraction_field
from .ratmap import RationalMap, phi_matrix, phi_scalar


class MinimalBasisError(AssertionError):
    """Internal inconsistency in basis construction; never swallowed."""


@dataclass(frozen=True)
class MinimalBasis:
    field: object
    ambient_dim: int
    vectors: tuple  # each a tuple of Poly of length ambient_dim
    indices: tuple

    @property
    def size(self) -> int:
        return len(self.vectors)

    @property
    def order(self) -> int:
        return sum(self.indices)

    def as_matrix(self) -> PolyMatrix:
        if not self.vectors:
            raise ValueError("empty basis has no matrix form")
        return PolyMatrix(
            self.field,
            [[vec[i] for vec in self.vectors] for i in range(self.ambient_dim)],
        )

    @classmethod
    def empty(cls, field, ambient_dim: int):
        return cls(field=field, ambient_dim=ambient_dim, vectors=(), indices=())


def vector_degree(vec) -> int:
    return max((p.degree for p in vec), default=-1)


def matvec(P: PolyMatrix, vec):
    if len(vec) != P.cols:
        raise ValueError("dimension mismatch")
    out = []
    for i in range(P.rows):
        acc = Poly.zero(P.field)
        for j in range(P.cols):
            if not (P.entries[i][j].is_zero() or vec[j].is_zero()):
                acc = acc + P.entries[i][j] * vec[j]
        out.append(acc)
    return tuple(out)


def _convolution_matrix(P: PolyMatrix, delta: int):
    """Coefficient matrix whose nullvectors are the kernel vectors of
    degree <= delta, laid out as blocks c_0, ..., c_delta."""
    field = P.field
    k = P.degree
    nrows = P.rows * (k + delta + 1)
    rows = [[field.zero] * (P.cols * (delta + 1)) for _ in range(nrows)]
    for r in range(P.rows):
        for c in range(P.cols):
            coeffs = P.entries[r][c].coeffs
            for t, coef in enumerate(coeffs):
                if field.is_zero(coef):
                    continue
                for j in range(delta + 1):
                    rows[(t + j) * P.rows + r][j * P.cols + c] = coef
    return rows


def _coeffvec_to_polyvec(field, v, cols: int, delta: int):
    out = []
    for c in range(cols):
        out.append(Poly(field, [v[j * cols + c] for j in range(delta + 1)]))
    return tuple(out)


def _polyvec_to_coeffvec(field, vec, delta: int):
    out = []
    for j in range(delta + 1):
        for p in vec:
            out.append(p.coeff(j))
    return out


def _normalize_polyvec(field, vec):
    for p in vec:
        for c in p.coeffs:
            if not field.is_zero(c):
                inv = field.inv(c)
                return tuple(q.scale(inv) for q in vec)
    return vec


def _candidate_sort_key(field, vec, delta: int):
    return tuple(field.sort_key(c) for c in _polyvec_to_coeffvec(field, vec, delta))


def right_kernel_minimal_basis(P: PolyMatrix, degree_cap=None) -> MinimalBasis:
    """Minimal basis of the right kernel by an exact degree sweep."""
    field = P.field
    s = P.cols - rank_fraction_field(P)
    if s == 0:
        return MinimalBasis.empty(field, P.cols)
    if degree_cap is None:
        degree_cap = P.grade * min(P.rows, P.cols) + 1
    chosen = []
    indices = []
    for delta in range(degree_cap + 1):
        null = linalg.nullspace(
            field, _convolution_matrix(P, delta), ncols=P.cols * (delta + 1)
        )
        if not null:
            continue
        span = IncrementalSpan(field)
        for vec, beta in zip(chosen, indices):
            for shift in range(delta - beta + 1):
                shifted = tuple(p.shift(shift) for p in vec)
                span.add(_polyvec_to_coeffvec(field, shifted, delta))
        candidates = [
            _normalize_polyvec(field, _coeffvec_to_polyvec(field, v, P.cols, delta))
            for v in null
        ]
        candidates.sort(key=lambda vec: _candidate_sort_key(field, vec, delta))
        for vec in candidates:
            if span.add(_polyvec_to_coeffvec(field, vec, delta)):
                if vector_degree(vec) != delta:
                    raise MinimalBasisError(
                        "new kernel vector does not have the sweep degree"
                    )
                chosen.append(vec)
                indices.append(delta)
                if len(chosen) == s:
                    break
        if len(chosen) == s:
            break
    else:
        raise MinimalBasisError(f"degree sweep exhausted cap {degree_cap}")
    basis = MinimalBasis(
        field=field,
        ambient_dim=P.cols,
        vectors=tuple(chosen),
        indices=tuple(indices),
    )
    diag = forney_check(P, basis)
    if not diag.ok:
        raise MinimalBasisError(f"constructed basis fails the minor criterion: {diag}")
    return basis


def left_kernel_minimal_basis(P: PolyMatrix, degree_cap=None) -> MinimalBasis:
    return right_kernel_minimal_basis(P.transpose(), degree_cap)


@dataclass(frozen=True)
class ForneyDiagnostics:
    ok: bool
    minor_gcd: object
    max_minor_degree: int
    order: int


def forney_check(P: PolyMatrix, basis: MinimalBasis) -> ForneyDiagnostics:
    """Minor criterion for minimality of a kernel basis.

    Checks membership in the kernel first, then that the maximal
    minors have unit gcd and top degree equal to the basis order.
    """
    field = P.field
    for vec in basis.vectors:
        if any(not e.is_zero() for e in matvec(P, vec)):
            raise ValueError("basis vector is not in the kernel")
    if basis.size == 0:
        return ForneyDiagnostics(
            ok=True, minor_gcd=Poly.one(field), max_minor_degree=0, order=0
        )
    V = basis.as_matrix()
    s = basis.size
    minors = []
    for rows_idx in combinations(range(basis.ambient_dim), s):
        minors.append(minor(V, rows_idx, tuple(range(s))))
    nonzero = [m for m in minors if not m.is_zero()]
    if not nonzero:
        return ForneyDiagnostics(
            ok=False, minor_gcd=Poly.zero(field), max_minor_degree=-1, order=basis.order
        )
    g = nonzero[0].monic()
    for m in nonzero[1:]:
        if g.is_one():
            break
        from .poly import poly_gcd

        g = poly_gcd(g, m)
    max_deg = max(m.degree for m in nonzero)
    ok = g.is_one() and max_deg == basis.order
    return ForneyDiagnostics(
        ok=ok, minor_gcd=g, max_minor_degree=max_deg, order=basis.order
    )


def minimal_indices_oracle(P: PolyMatrix, degree_cap=None):
    """Independent recomputation of the right minimal indices.

    Sweeps degrees exhaustively and keeps every nullspace solution that
    enlarges the rank over the rational-function field, testing
    independence by multipoint evaluation instead of coefficient-space
    bookkeeping.  Structurally different from the basis construction,
    so the two must agree.
    """
    field = P.field
    s = P.cols - rank_fraction_field(P)
    if s == 0:
        return ()
    if degree_cap is None:
        degree_cap = P.grade * min(P.rows, P.cols) + 1
    if degree_cap < P.grade * min(P.rows, P.cols):
        raise ValueError("degree cap below the index-sum bound")
    kept = []
    degrees = []
    for delta in range(degree_cap + 1):
        null = linalg.nullspace(
            field, _convolution_matrix(P, delta), ncols=P.cols * (delta + 1)
        )
        candidates = [
            _normalize_polyvec(field, _coeffvec_to_polyvec(field, v, P.cols, delta))
            for v in null
        ]
        candidates.sort(key=lambda vec: _candidate_sort_key(field, vec, delta))
        for vec in candidates:
            stacked = kept + [vec]
            M = PolyMatrix(
                field,
                [[w[i] for w in stacked] for i in range(P.cols)],
            )
            if rank_fraction_field(M) == len(stacked):
                kept.append(vec)
                degrees.append(vector_degree(vec))
                if len(kept) == s:
                    return tuple(sorted(degrees))
    raise ValueError(f"degree cap {degree_cap} exhausted before finding {s} vectors")


def transform_minimal_basis(
    P: PolyMatrix, basis: MinimalBasis, m: RationalMap
) -> MinimalBasis:
    """Push a minimal kernel basis through the substitution: each
    vector maps with its own degree as the grade, multiplying its
    index by G; the result is validated as a minimal basis for the
    image matrix."""
    field = basis.field
    if basis.size == 0:
        return basis
    new_vectors = []
    new_indices = []
    for vec, beta in zip(basis.vectors, basis.indices):
        w = tuple(phi_scalar(p, beta, m) for p in vec)
        if vector_degree(w) != m.G * beta:
            raise MinimalBasisError("transformed vector degree is not G * index")
        new_vectors.append(w)
        new_indices.append(m.G * beta)
    out = MinimalBasis(
        field=field,
        ambient_dim=basis.ambient_dim,
        vectors=tuple(new_vectors),
        indices=tuple(new_indices),
    )
    Q = phi_matrix(P, m)
    diag = forney_check(Q, out)
    if not diag.ok:
        raise MinimalBasisError(f"transformed basis fails the minor criterion: {diag}")
    return out
