"""Integer Smith normal form with exact (arbitrary-precision) arithmetic.

Diagonalizes an integer matrix A by unimodular row and column operations,
returning D = U * A * V with d1 | d2 | ... | dk > 0 on the diagonal.  The
pivot strategy picks the minimal nonzero absolute value with row/column
swaps and Euclidean reduction; entries stay Python ints throughout, so
intermediate growth never overflows.

The diagonal gives exact solution counts of homogeneous systems over Z_n:
A*x = 0 (mod n) has n**(cols - k) * prod(gcd(d_i, n)) solutions, and the
right transform V parameterizes them.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SmithForm:
    """Result of :func:`smith_normal_form`: U * A * V = diag(diagonal)."""

    rows: int
    cols: int
    diagonal: tuple[int, ...]
    row_transform: Matrix  # U, rows x rows, |det| = 1
    col_transform: Matrix  # V, cols x cols, |det| = 1

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    def diagonal_matrix(self) -> Matrix:
        """The full rows x cols diagonal matrix D."""
        d = [[0] * self.cols for _ in range(self.rows)]
        for i, v in enumerate(self.diagonal):
            d[i][i] = v
        return tuple(tuple(row) for row in d)


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(matrix: Sequence[Sequence[int]], cols: int | None = None) -> SmithForm:
    """Compute the Smith normal form of an integer matrix.

    ``cols`` is only needed when ``matrix`` has no rows.
    """
    a = [[int(v) for v in row] for row in matrix]
    m = len(a)
    if m:
        widths = {len(row) for row in a}
        if len(widths) != 1:
            raise ValueError("matrix rows have differing lengths")
        n = widths.pop()
        if cols is not None and cols != n:
            raise ValueError(f"cols={cols} disagrees with row length {n}")
    else:
        if cols is None:
            raise ValueError("cols is required for a matrix with no rows")
        n = cols
    u = _identity(m)
    v = _identity(n)

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, factor: int) -> None:
        a[dst] = [x + factor * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + factor * y for x, y in zip(u[dst], u[src])]

    def add_col(dst: int, src: int, factor: int) -> None:
        for row in a:
            row[dst] += factor * row[src]
        for row in v:
            row[dst] += factor * row[src]

    def negate_row(i: int) -> None:
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    rank = 0
    for s in range(min(m, n)):
        exhausted = False
        while True:
            # minimal |entry| != 0 in the trailing submatrix becomes the pivot
            pivot = None
            best = None
            for i in range(s, m):
                for j in range(s, n):
                    w = abs(a[i][j])
                    if w and (best is None or w < best):
                        best = w
                        pivot = (i, j)
            if pivot is None:
                exhausted = True
                break
            if pivot[0] != s:
                swap_rows(s, pivot[0])
            if pivot[1] != s:
                swap_cols(s, pivot[1])
            if a[s][s] < 0:
                negate_row(s)
            # Euclidean clearing of column s and row s; floor division keeps
            # residues in [0, pivot), so each swap shrinks the pivot
            while True:
                for i in range(s + 1, m):
                    if a[i][s]:
                        add_row(i, s, -(a[i][s] // a[s][s]))
                left = next((i for i in range(s + 1, m) if a[i][s]), None)
                if left is not None:
                    swap_rows(s, left)
                    continue
                for j in range(s + 1, n):
                    if a[s][j]:
                        add_col(j, s, -(a[s][j] // a[s][s]))
                left = next((j for j in range(s + 1, n) if a[s][j]), None)
                if left is not None:
                    swap_cols(s, left)
                    continue
                break
            # divisibility chain: the pivot must divide the rest of the block
            piv = a[s][s]
            bad_row = next(
                (
                    i
                    for i in range(s + 1, m)
                    if any(a[i][j] % piv for j in range(s + 1, n))
                ),
                None,
            )
            if bad_row is None:
                rank += 1
                break
            add_row(s, bad_row, 1)
        if exhausted:
            break

    diagonal = tuple(a[i][i] for i in range(rank))
    return SmithForm(
        rows=m,
        cols=n,
        diagonal=diagonal,
        row_transform=tuple(tuple(row) for row in u),
        col_transform=tuple(tuple(row) for row in v),
    )


def solution_count_mod(snf: SmithForm, n: int) -> int:
    """Number of x in (Z_n)^cols with A*x = 0 (mod n), from A's Smith form."""
    if n < 1:
        raise ValueError(f"modulus must be >= 1, got {n}")
    count = n ** (snf.cols - snf.rank)
    for d in snf.diagonal:
        count *= gcd(d, n)
    return count
