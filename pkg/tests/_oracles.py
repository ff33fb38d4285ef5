"""Independent brute-force oracles used only by the tests."""

from fractions import Fraction

import numpy as np
from numba import njit


def squares_mod(p):
    return {r * r % p for r in range(p)}


def brute_sqrt(a, p):
    """All square roots of a mod p by exhaustive search."""
    return sorted(r for r in range(p) if r * r % p == a % p)


def naive_clifford_product(S_list, T_list, coeffs):
    """Multiply e_{S} e_{T} by literally bubble-sorting the word.

    Words are lists of generator indices.  Adjacent equal generators are
    contracted to their square.  Returns ``(scalar, sorted_index_tuple)``.
    """
    word = list(S_list) + list(T_list)
    scalar = Fraction(1)
    changed = True
    while changed:
        changed = False
        for k in range(len(word) - 1):
            if word[k] > word[k + 1]:
                word[k], word[k + 1] = word[k + 1], word[k]
                scalar = -scalar
                changed = True
                break
            if word[k] == word[k + 1]:
                scalar *= coeffs[word[k]]
                del word[k:k + 2]
                changed = True
                break
    return scalar, tuple(word)


@njit(cache=True)
def naive_parity_table(rank):
    """Swap parity of bubble-sorting e_S e_T, for every pair of subsets."""
    dim = 1 << rank
    out = np.zeros((dim, dim), dtype=np.uint8)
    seq = np.empty(2 * rank, dtype=np.int64)
    for S in range(dim):
        for T in range(dim):
            k = 0
            for i in range(rank):
                if (S >> i) & 1:
                    seq[k] = i
                    k += 1
            for i in range(rank):
                if (T >> i) & 1:
                    seq[k] = i
                    k += 1
            swaps = 0
            for a in range(k):
                for b in range(k - 1 - a):
                    if seq[b] > seq[b + 1]:
                        tmp = seq[b]
                        seq[b] = seq[b + 1]
                        seq[b + 1] = tmp
                        swaps += 1
            out[S, T] = swaps & 1
    return out


def dense_matrix_product_table(n):
    """Structure constants of n x n matrices computed by numpy matmul."""
    dim = n * n
    units = []
    for a in range(n):
        for b in range(n):
            E = np.zeros((n, n), dtype=np.int64)
            E[a, b] = 1
            units.append(E)
    table = np.zeros((dim, dim, dim), dtype=np.int64)
    for i, X in enumerate(units):
        for j, Y in enumerate(units):
            table[i, j] = (X @ Y).reshape(-1)
    return table


def brute_center_dim_mod_p(full_table, p):
    """Center dimension from a dense (dim, dim, dim) table by trying all commutators.

    Solves sum_k z_k (c[k, j] - c[j, k]) = 0 over all j with sympy-free
    elimination implemented inline (kept separate from the package code).
    """
    dim = full_table.shape[0]
    rows = []
    for j in range(dim):
        block = (full_table[:, j, :] - full_table[j, :, :]).T  # (out_coord, k)
        rows.extend(block.tolist())
    M = [[x % p for x in row] for row in rows]
    rank = 0
    ncols = dim
    for c in range(ncols):
        piv = next((r for r in range(rank, len(M)) if M[r][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][c], -1, p)
        M[rank] = [x * inv % p for x in M[rank]]
        for r in range(len(M)):
            if r != rank and M[r][c]:
                f = M[r][c]
                M[r] = [(x - f * y) % p for x, y in zip(M[r], M[rank])]
        rank += 1
    return dim - rank
