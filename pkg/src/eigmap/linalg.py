"""Exact Gaussian elimination for constant matrices over a field.

Matrices are plain lists of lists of field elements.  Everything here
is deterministic: pivots are chosen as the first nonzero entry in
column order, so reduced forms and nullspace bases are canonical.
"""


def rref(field, rows):
    """Reduced row echelon form: returns (new rows, pivot column list)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(m)):
            if not field.is_zero(m[i][c]):
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = field.inv(m[r][c])
        m[r] = [field.mul(inv, v) for v in m[r]]
        for i in range(len(m)):
            if i != r and not field.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(field, rows) -> int:
    return len(rref(field, rows)[1])


def nullspace(field, rows, ncols=None):
    """Canonical basis of the right nullspace as a list of vectors."""
    if ncols is None:
        if not rows:
            raise ValueError("empty matrix needs an explicit column count")
        ncols = len(rows[0])
    if not rows:
        reduced, pivots = [], []
    else:
        reduced, pivots = rref(field, rows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = field.neg(reduced[r][fc])
        basis.append(v)
    return basis


def in_span(field, basis, v) -> bool:
    """Whether v lies in the span of the given basis vectors."""
    if not basis:
        return all(field.is_zero(x) for x in v)
    rows = [list(b) for b in basis]
    return rank(field, rows + [list(v)]) == rank(field, rows)


def independent_rows(field, rows):
    """Indices of a maximal independent subset, scanning in order."""
    kept = []
    kept_rows = []
    current = 0
    for idx, row in enumerate(rows):
        trial = kept_rows + [list(row)]
        r = rank(field, trial)
        if r > current:
            kept.append(idx)
            kept_rows = trial
            current = r
    return kept


class IncrementalSpan:
    """Row span maintained in echelon form for cheap membership tests."""

    def __init__(self, field):
        self.field = field
        self.rows = {}  # pivot column -> normalized row

    def _reduce(self, v):
        f = self.field
        v = list(v)
        for pc in sorted(self.rows):
            if not f.is_zero(v[pc]):
                coef = v[pc]
                row = self.rows[pc]
                v = [f.sub(a, f.mul(coef, b)) for a, b in zip(v, row)]
        return v

    def add(self, v) -> bool:
        """Insert v; returns False when v was already in the span."""
        f = self.field
        v = self._reduce(v)
        pivot = next((i for i, a in enumerate(v) if not f.is_zero(a)), None)
        if pivot is None:
            return False
        inv = f.inv(v[pivot])
        self.rows[pivot] = [f.mul(inv, a) for a in v]
        return True

    def contains(self, v) -> bool:
        f = self.field
        return all(f.is_zero(a) for a in self._reduce(v))

    @property
    def dim(self) -> int:
        return len(self.rows)
