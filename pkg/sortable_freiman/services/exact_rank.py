# sortable_freiman/services/exact_rank.py

from __future__ import annotations

from typing import Sequence


def bareiss_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix by fraction-free (Bareiss) elimination.

    Every intermediate entry is a minor of the input, so the division by the
    previous pivot is exact and the arithmetic stays in the integers.
    """
    matrix = [list(map(int, row)) for row in rows]
    if not matrix:
        return 0
    n_rows = len(matrix)
    n_cols = len(matrix[0])
    rank = 0
    prev_pivot = 1
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot_row = next((r for r in range(rank, n_rows) if matrix[r][col]), None)
        if pivot_row is None:
            continue
        if pivot_row != rank:
            matrix[rank], matrix[pivot_row] = matrix[pivot_row], matrix[rank]
        pivot = matrix[rank][col]
        for r in range(rank + 1, n_rows):
            lead = matrix[r][col]
            row = matrix[r]
            top = matrix[rank]
            for c in range(col + 1, n_cols):
                row[c] = (pivot * row[c] - lead * top[c]) // prev_pivot
            row[col] = 0
        prev_pivot = pivot
        rank += 1
    return rank
