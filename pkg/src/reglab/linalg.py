"""Exact rank of integer matrices by fraction-free elimination."""

from __future__ import annotations


def integer_rank(rows) -> int:
    """Rank over the rationals of an integer matrix given as a list of rows.

    Bareiss elimination keeps every entry an integer; the pivot row is the one
    with the fewest nonzeros in the pivot column's candidates, which keeps the
    boundary matrices of simplicial complexes sparse while eliminating.
    """
    A = [[int(v) for v in row] for row in rows]
    if not A:
        return 0
    ncols = len(A[0])
    if any(len(r) != ncols for r in A):
        raise ValueError("ragged matrix")
    rank = 0
    prev = 1
    nrows = len(A)
    for col in range(ncols):
        best = None
        for r in range(rank, nrows):
            if A[r][col]:
                weight = sum(1 for v in A[r] if v)
                if best is None or weight < best[0]:
                    best = (weight, r)
        if best is None:
            continue
        p = best[1]
        A[rank], A[p] = A[p], A[rank]
        piv = A[rank][col]
        for r in range(rank + 1, nrows):
            row = A[r]
            f = row[col]
            if f == 0:
                if piv != prev:
                    # keep the Bareiss invariant: every remaining row is scaled by piv/prev
                    A[r] = [(piv * v) // prev for v in row]
                continue
            top = A[rank]
            A[r] = [(piv * row[c] - f * top[c]) // prev for c in range(ncols)]
        prev = piv
        rank += 1
        if rank == nrows:
            break
    return rank
