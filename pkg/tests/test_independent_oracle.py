"""A from-scratch dense oracle for the block dimensions.

Independent of the production code path on purpose: the cocycle
conditions of each block on the model algebra reduce to the single
recurrence

    shift(phi(u, v)) = phi(shift u, v) + phi(u, shift v)

where shift is the chain map of the X0-action (last element to zero).
This file rebuilds that recurrence as dense Fraction matrices and does
textbook Gaussian elimination, sharing no code with the sparse
assembler or the elimination engine, then compares dimensions.
"""

from fractions import Fraction
from itertools import combinations, product

from colorfil.algebra import build_model
from colorfil.cohomology import ALL_BLOCKS, block_dims


def dense_nullity(rows, n_cols):
    rows = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    for col in range(n_cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = 1 / rows[rank][col]
        rows[rank] = [v * inv for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return n_cols - rank


def block_dim_by_recurrence(block, n, m, p):
    """Dimension of one block from the reduced recurrence, dense."""
    chain_len = {0: n, 1: m, 2: p}
    (g1, g2), gt = block.source_degrees, block.target_degree
    d1, d2, dt = chain_len[g1], chain_len[g2], chain_len[gt]
    if g1 == g2:
        pairs = list(combinations(range(1, d1 + 1), 2))
    else:
        pairs = [(i, j) for i in range(1, d1 + 1) for j in range(1, d2 + 1)]
    cols = {(i, j, s): idx for idx, (i, j, s) in enumerate(
        (i, j, s) for i, j in pairs for s in range(1, dt + 1))}

    def coeff_of(i, j, s):
        # canonical column with orientation sign; beyond-chain indices die
        if i == j and g1 == g2:
            return None, 0
        sign = 1
        if g1 == g2 and i > j:
            i, j, sign = j, i, -1
        key = (i, j, s)
        return (cols[key], sign) if key in cols else (None, 0)

    rows = []
    for i, j in pairs:
        for t in range(1, dt + 1):
            row = [0] * len(cols)
            if t > 1:  # shift(phi(u,v)) lands at t from target index t-1
                col, sign = coeff_of(i, j, t - 1)
                if col is not None:
                    row[col] += sign
            if i + 1 <= d1:
                col, sign = coeff_of(i + 1, j, t)
                if col is not None:
                    row[col] -= sign
            if j + 1 <= d2:
                col, sign = coeff_of(i, j + 1, t)
                if col is not None:
                    row[col] -= sign
            if any(row):
                rows.append(row)
    return dense_nullity(rows, len(cols))


def test_production_dims_match_dense_recurrence_oracle():
    for n, m, p in product(range(1, 5), range(0, 4), range(0, 4)):
        produced = block_dims(build_model(n, m, p))
        for block in ALL_BLOCKS:
            expected = block_dim_by_recurrence(block, n, m, p)
            assert produced[block] == expected, (block.name, n, m, p)
