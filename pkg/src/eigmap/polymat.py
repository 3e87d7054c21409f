"""Polynomial matrices with an explicit grade.

A PolyMatrix is an immutable m x p array of Poly entries together with
a grade g >= max entry degree.  The grade matters only for reversal
and for the structure at infinity; arithmetic ignores it.
"""

import itertools

from . import linalg
from .fields import require_same_field
from .poly import Poly, poly_gcd, reversal


class PolyMatrix:
    __slots__ = ("field", "rows", "cols", "entries", "grade")

    def __init__(self, field, entries, grade=None):
        rows = len(entries)
        if rows == 0 or len(entries[0]) == 0:
            raise ValueError("matrix dimensions must be positive")
        cols = len(entries[0])
        norm = []
        for row in entries:
            if len(row) != cols:
                raise ValueError("ragged rows")
            for e in row:
                require_same_field(field, e.field)
            norm.append(tuple(row))
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = tuple(norm)
        k = self.degree
        if grade is None:
            grade = max(k, 0)
        if grade < k:
            raise ValueError(f"grade {grade} below matrix degree {k}")
        self.grade = grade

    @classmethod
    def zero(cls, field, rows, cols, grade=0):
        z = Poly.zero(field)
        return cls(field, [[z] * cols for _ in range(rows)], grade)

    @classmethod
    def identity(cls, field, n, grade=0):
        one = Poly.one(field)
        z = Poly.zero(field)
        return cls(
            field, [[one if i == j else z for j in range(n)] for i in range(n)], grade
        )

    @classmethod
    def from_scalar_rows(cls, field, rows, grade=None):
        """Build from a 2D array of field constants."""
        return cls(
            field,
            [[Poly.constant(field, c) for c in row] for row in rows],
            grade,
        )

    @property
    def degree(self) -> int:
        """Max entry degree, with 0 for the zero matrix."""
        k = max((e.degree for row in self.entries for e in row), default=-1)
        return max(k, 0) if k < 0 else k

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.field == other.field
            and self.entries == other.entries
            and self.grade == other.grade
        )

    def same_entries(self, other) -> bool:
        return (
            isinstance(other, PolyMatrix)
            and self.field == other.field
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field, self.entries, self.grade))

    def with_grade(self, grade: int):
        return PolyMatrix(self.field, self.entries, grade)

    def transpose(self):
        return PolyMatrix(
            self.field,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            self.grade,
        )

    def __add__(self, other):
        require_same_field(self.field, other.field)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch")
        return PolyMatrix(
            self.field,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
            max(self.grade, other.grade),
        )

    def __sub__(self, other):
        return self + other.scale_poly(Poly.constant(self.field, self.field.neg(self.field.one)))

    def scale_poly(self, p: Poly):
        return PolyMatrix(
            self.field,
            [[e * p for e in row] for row in self.entries],
            None,
        )

    def __matmul__(self, other):
        require_same_field(self.field, other.field)
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        z = Poly.zero(self.field)
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = z
                for k in range(self.cols):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if not (a.is_zero() or b.is_zero()):
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.field, out, None)

    def column(self, j: int):
        return tuple(self.entries[i][j] for i in range(self.rows))

    def __repr__(self):
        from .parsing import poly_to_str

        body = "; ".join(
            ", ".join(poly_to_str(e) for e in row) for row in self.entries
        )
        return f"PolyMatrix[{self.rows}x{self.cols}, grade {self.grade}]({body})"


def reversal_matrix(P: PolyMatrix) -> PolyMatrix:
    """Entrywise coefficient reversal with respect to the matrix grade."""
    g = P.grade
    return PolyMatrix(
        P.field,
        [[reversal(e, g) for e in row] for row in P.entries],
        g,
    )


def eval_matrix(P: PolyMatrix, c):
    """Evaluate every entry, giving a constant matrix (list of lists)."""
    c = P.field.coerce(c)
    return [[e.evaluate(c) for e in row] for row in P.entries]


def _evaluation_points(field, count: int):
    if field.characteristic == 0:
        pts = [field.zero]
        k = 1
        while len(pts) < count:
            pts.append(field.from_int(k))
            if len(pts) < count:
                pts.append(field.from_int(-k))
            k += 1
        return pts[:count]
    if field.p >= count:
        return [field.from_int(i) for i in range(count)]
    return None


def rank_fraction_field(P: PolyMatrix) -> int:
    """Rank of P over the field of rational functions.

    Evaluates at enough points that a nonzero minor cannot vanish
    everywhere; over a too-small prime field it falls back to direct
    minor expansion.
    """
    nu = min(P.rows, P.cols)
    count = P.degree * nu + 1
    pts = _evaluation_points(P.field, count)
    if pts is not None:
        best = 0
        for c in pts:
            best = max(best, linalg.rank(P.field, eval_matrix(P, c)))
            if best == nu:
                break
        return best
    if nu > 5:
        raise ValueError("minor-expansion rank fallback limited to min(m,p) <= 5")
    for r in range(nu, 0, -1):
        for rows_idx in itertools.combinations(range(P.rows), r):
            for cols_idx in itertools.combinations(range(P.cols), r):
                if not minor(P, rows_idx, cols_idx).is_zero():
                    return r
    return 0


def determinant(P: PolyMatrix) -> Poly:
    """Determinant by Laplace expansion memoized over column subsets."""
    if P.rows != P.cols:
        raise ValueError("determinant of a non-square matrix")
    entries = P.entries
    field = P.field
    memo = {}

    def expand(row, cols):
        if not cols:
            return Poly.one(field)
        key = cols
        if key in memo:
            return memo[key]
        acc = Poly.zero(field)
        sign = 1
        for idx, c in enumerate(cols):
            e = entries[row][c]
            if not e.is_zero():
                sub = expand(row + 1, cols[:idx] + cols[idx + 1 :])
                term = e * sub
                acc = acc + (term if sign > 0 else -term)
            sign = -sign
        memo[key] = acc
        return acc

    return expand(0, tuple(range(P.cols)))


def minor(P: PolyMatrix, rows_idx, cols_idx) -> Poly:
    sub = PolyMatrix(
        P.field,
        [[P.entries[i][j] for j in cols_idx] for i in rows_idx],
    )
    return determinant(sub)


def is_unimodular(A: PolyMatrix) -> bool:
    if A.rows != A.cols:
        raise ValueError("unimodularity is defined for square matrices")
    d = determinant(A)
    return d.is_constant() and not d.is_zero()


def is_regular(A: PolyMatrix) -> bool:
    if A.rows != A.cols:
        raise ValueError("regularity is defined for square matrices")
    return not determinant(A).is_zero()


def determinantal_divisors(P: PolyMatrix):
    """[D_1, ..., D_nu]: monic gcd of all i x i minors, or zero.

    Independent ground truth for the Smith form: the invariant
    polynomials are the ratios D_i / D_{i-1}.
    """
    nu = min(P.rows, P.cols)
    out = []
    for size in range(1, nu + 1):
        acc = Poly.zero(P.field)
        for rows_idx in itertools.combinations(range(P.rows), size):
            for cols_idx in itertools.combinations(range(P.cols), size):
                m = minor(P, rows_idx, cols_idx)
                if m.is_zero():
                    continue
                acc = m if acc.is_zero() else poly_gcd(acc, m)
                if acc.is_one():
                    break
            if acc.is_one():
                break
        acc = acc.monic()
        out.append(acc)
        if acc.is_zero():
            out.extend([Poly.zero(P.field)] * (nu - size))
            break
    return out
