"""Exact linear algebra over the rationals: sparse span bookkeeping, dense
nullspaces, and small matrix helpers used by the local-model routines."""

from __future__ import annotations

from fractions import Fraction


class SpanBasis:
    """Incrementally row-reduced basis of a subspace of a (possibly huge)
    coordinate space.  Rows are sparse dicts column -> Fraction; every stored
    row has coefficient 1 at its pivot, which is its minimal column."""

    def __init__(self):
        self.pivots: dict = {}

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: dict) -> dict:
        """Residue of vec modulo the current span (vec is not mutated)."""
        out = {c: v for c, v in vec.items() if v != 0}
        while out:
            col = min(out)
            row = self.pivots.get(col)
            if row is None:
                # eliminate any later reducible columns as well, so that a
                # zero residue is always recognised
                tail = {c: v for c, v in out.items() if c > col and c in self.pivots}
                if not tail:
                    return out
                c2 = min(tail)
                factor = out[c2]
                for c, v in self.pivots[c2].items():
                    nv = out.get(c, Fraction(0)) - factor * v
                    if nv == 0:
                        out.pop(c, None)
                    else:
                        out[c] = nv
                continue
            factor = out[col]
            for c, v in row.items():
                nv = out.get(c, Fraction(0)) - factor * v
                if nv == 0:
                    out.pop(c, None)
                else:
                    out[c] = nv
        return out

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def insert(self, vec: dict) -> bool:
        """Add vec to the span. Returns True if the dimension grew."""
        res = self.reduce(vec)
        if not res:
            return False
        col = min(res)
        inv = 1 / res[col]
        self.pivots[col] = {c: v * inv for c, v in res.items()}
        return True


def rank_rows(rows) -> int:
    sb = SpanBasis()
    for r in rows:
        sb.insert(r)
    return sb.dim


def nullspace_dense(rows: list, ncols: int) -> list:
    """Basis of {x : A x = 0} for A given as dense rows of Fractions."""
    # forward elimination with column pivots
    mat = [list(map(Fraction, r)) for r in rows if any(v != 0 for v in r)]
    pivot_of_col: dict = {}
    reduced: list = []
    for row in mat:
        row = row[:]
        for col, ridx in pivot_of_col.items():
            if row[col] != 0:
                f = row[col]
                prow = reduced[ridx]
                for j in range(ncols):
                    if prow[j] != 0:
                        row[j] -= f * prow[j]
        lead = next((j for j in range(ncols) if row[j] != 0), None)
        if lead is None:
            continue
        inv = 1 / row[lead]
        row = [v * inv for v in row]
        pivot_of_col[lead] = len(reduced)
        reduced.append(row)
    # back substitution
    for col in sorted(pivot_of_col, reverse=True):
        prow = reduced[pivot_of_col[col]]
        for other_col, ridx in pivot_of_col.items():
            if other_col == col:
                continue
            row = reduced[ridx]
            if row[col] != 0:
                f = row[col]
                for j in range(ncols):
                    if prow[j] != 0:
                        row[j] -= f * prow[j]
    free_cols = [j for j in range(ncols) if j not in pivot_of_col]
    basis = []
    for fc in free_cols:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for col, ridx in pivot_of_col.items():
            vec[col] = -reduced[ridx][fc]
        basis.append(vec)
    return basis


def rank_dense(rows: list, ncols: int) -> int:
    sb = SpanBasis()
    for r in rows:
        sb.insert({j: v for j, v in enumerate(r) if v != 0})
    return sb.dim


# --- small dense matrix helpers (lists of lists of Fractions) ---


def mat_mul(a, b):
    n, k, m2 = len(a), len(b), len(b[0])
    out = [[Fraction(0)] * m2 for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for kk in range(k):
            v = ai[kk]
            if v == 0:
                continue
            bk = b[kk]
            for j in range(m2):
                if bk[j] != 0:
                    oi[j] += v * bk[j]
    return out

def mat_vec(a, v):
    return [sum((row[j] * v[j] for j in range(len(v)) if v[j] != 0), Fraction(0)) for row in a]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[c * x for x in row] for row in a]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def identity_matrix(n):
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def zero_matrix(n, m=None):
    m = n if m is None else m
    return [[Fraction(0)] * m for _ in range(n)]


def mat_eq(a, b) -> bool:
    return all(ra == rb for ra, rb in zip(a, b)) and len(a) == len(b)


def mat_trace(a) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def flatten(a) -> dict:
    n = len(a[0])
    return {i * n + j: v for i, row in enumerate(a) for j, v in enumerate(row) if v != 0}
