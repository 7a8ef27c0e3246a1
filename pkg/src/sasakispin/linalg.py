"""Exact sparse linear algebra over Q(i, sqrt2).

Vectors and matrix rows are dicts {column index: Scalar}; zero entries are
absent.  Everything is plain Gaussian elimination -- the point is exactness,
not asymptotics (nothing here exceeds a few thousand rows).
"""
from __future__ import annotations

from .scalars import ONE, ZERO, Scalar

SparseVec = dict


def vec_axpy(target: SparseVec, factor: Scalar, source: SparseVec) -> None:
    """target += factor * source, in place, dropping zeros."""
    for col, val in source.items():
        new = target.get(col, ZERO) + factor * val
        if new.is_zero():
            target.pop(col, None)
        else:
            target[col] = new


def row_reduce(rows: list[SparseVec]) -> list[tuple[int, SparseVec]]:
    """Reduced row echelon form.  Returns [(pivot column, row)] sorted by
    pivot column; input rows are consumed."""
    pending = [dict(r) for r in rows if r]
    reduced: list[tuple[int, SparseVec]] = []
    while pending:
        row = pending.pop()
        for pivot_col, pivot_row in reduced:
            if pivot_col in row:
                vec_axpy(row, -row[pivot_col], pivot_row)
        if not row:
            continue
        col = min(row)
        inv = row[col].inverse()
        row = {c: inv * v for c, v in row.items()}
        for i, (pc, pr) in enumerate(reduced):
            if col in pr:
                pr = dict(pr)
                vec_axpy(pr, -pr[col], row)
                reduced[i] = (pc, pr)
        reduced.append((col, row))
    reduced.sort()
    return reduced


def rank(rows: list[SparseVec]) -> int:
    return len(row_reduce(rows))


def nullspace(rows: list[SparseVec], ncols: int) -> list[SparseVec]:
    """Basis of {x : M x = 0} where the rows are the rows of M."""
    reduced = row_reduce(rows)
    pivot_cols = [c for c, _ in reduced]
    free_cols = [c for c in range(ncols) if c not in set(pivot_cols)]
    basis = []
    for f in free_cols:
        vec: SparseVec = {f: ONE}
        for c, row in reduced:
            coeff = row.get(f)
            if coeff is not None:
                vec[c] = -coeff
        basis.append(vec)
    return basis


def residual(vector: SparseVec, reduced: list[tuple[int, SparseVec]]) -> SparseVec:
    """Remainder of vector after eliminating against reduced rows."""
    out = dict(vector)
    for col, row in reduced:
        if col in out:
            vec_axpy(out, -out[col], row)
    return out


def in_span(vector: SparseVec, basis: list[SparseVec]) -> bool:
    return not residual(vector, row_reduce(list(basis)))


def span_equal(basis_a: list[SparseVec], basis_b: list[SparseVec]) -> bool:
    ra = row_reduce(list(basis_a))
    rb = row_reduce(list(basis_b))
    if [c for c, _ in ra] != [c for c, _ in rb]:
        return False
    return all(ra_row == rb_row for (_, ra_row), (_, rb_row) in zip(ra, rb))


def independent_subset(vectors: list[SparseVec]) -> list[SparseVec]:
    """Greedy maximal independent subset, preserving order."""
    reduced: list[tuple[int, SparseVec]] = []
    chosen = []
    for v in vectors:
        rem = residual(v, reduced)
        if rem:
            chosen.append(v)
            reduced = row_reduce([r for _, r in reduced] + [rem])
    return chosen


def solve_dense(matrix: list[list[Scalar]], rhs: list[Scalar]) -> list[Scalar]:
    """Solve a small square system exactly; raises on singular matrix."""
    n = len(matrix)
    work = [list(matrix[r]) + [rhs[r]] for r in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not work[r][col].is_zero()), None)
        if pivot is None:
            raise ZeroDivisionError("singular linear system")
        work[col], work[pivot] = work[pivot], work[col]
        inv = work[col][col].inverse()
        work[col] = [inv * a for a in work[col]]
        for r in range(n):
            if r != col and not work[r][col].is_zero():
                f = work[r][col]
                work[r] = [a - f * b for a, b in zip(work[r], work[col])]
    return [work[r][n] for r in range(n)]
