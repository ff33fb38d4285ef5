"""Exact linear algebra over F_p (dense numpy, int64) and Q (fraction-free)."""

from __future__ import annotations

from fractions import Fraction
from math import lcm

import numpy as np

from .fields import PrimeField, RationalField


def rref_mod_p(A, p: int):
    """Reduced row echelon form over F_p.

    Returns ``(R, pivots)`` where ``R`` holds only the nonzero rows.
    Entries stay below ``p**2 < 2**32`` so int64 never overflows.
    """
    A = np.mod(np.array(A, dtype=np.int64), p)
    m, n = A.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        rows = np.flatnonzero(A[:, c])
        rows = rows[rows != r]
        if rows.size:
            A[rows] = (A[rows] - np.outer(A[rows, c], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank_mod_p(A, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    # eliminate along the shorter side
    if A.shape[0] > A.shape[1]:
        A = A.T
    return len(rref_mod_p(A, p)[1])


def nullspace_mod_p(A, p: int):
    """Basis of ``{x : A x = 0}`` as the rows of a ``(k, n)`` array."""
    A = np.asarray(A)
    n = A.shape[1]
    R, pivots = rref_mod_p(A, p)
    free = [c for c in range(n) if c not in set(pivots)]
    out = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        out[k, f] = 1
        for row, pc in enumerate(pivots):
            out[k, pc] = (-R[row, f]) % p
    return out


def _integer_rows(A):
    rows = []
    for row in A:
        row = [Fraction(x) for x in row]
        den = lcm(*(x.denominator for x in row)) if row else 1
        rows.append([int(x * den) for x in row])
    return rows


def rank_bareiss(A) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination.

    Rows are scaled to integers first; all intermediate entries are then
    integer minors of that matrix, so the floor division is exact.
    """
    rows = _integer_rows(A)
    if not rows or not rows[0]:
        return 0
    M = np.array(rows, dtype=object)
    m, n = M.shape
    prev = 1
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = [i for i in range(r, m) if M[i, c] != 0]
        if not nz:
            continue
        i = nz[0]
        if i != r:
            M[[r, i]] = M[[i, r]]
        piv = M[r, c]
        if r + 1 < m and c + 1 < n:
            M[r + 1:, c + 1:] = (piv * M[r + 1:, c + 1:]
                                 - np.outer(M[r + 1:, c], M[r, c + 1:])) // prev
        M[r + 1:, c] = 0
        prev = piv
        r += 1
    return r


def rref_rational(A):
    """Reduced row echelon form over Q with Fraction entries."""
    M = [[Fraction(x) for x in row] for row in A]
    m = len(M)
    n = len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        i = next((i for i in range(r, m) if M[i][c] != 0), None)
        if i is None:
            continue
        M[r], M[i] = M[i], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for k in range(m):
            if k != r and M[k][c] != 0:
                f = M[k][c]
                M[k] = [a - f * b for a, b in zip(M[k], M[r])]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(A, field) -> int:
    if isinstance(field, PrimeField):
        return rank_mod_p(A, field.p)
    if isinstance(field, RationalField):
        return rank_bareiss(A)
    raise TypeError(f"unsupported field {field!r}")


def nullspace(A, field):
    if isinstance(field, PrimeField):
        return nullspace_mod_p(A, field.p)
    A = np.asarray(A, dtype=object)
    n = A.shape[1]
    R, pivots = rref_rational(A.tolist())
    free = [c for c in range(n) if c not in set(pivots)]
    out = field.zeros((len(free), n))
    for k, f in enumerate(free):
        out[k, f] = Fraction(1)
        for row, pc in enumerate(pivots):
            out[k, pc] = -R[row][f]
    return out


def solve(A, b, field):
    """One solution ``x`` of ``A x = b`` or ``None`` if inconsistent."""
    A = np.asarray(A)
    b = np.asarray(b).reshape(-1, 1)
    aug = np.concatenate([A, b], axis=1)
    n = A.shape[1]
    if isinstance(field, PrimeField):
        R, pivots = rref_mod_p(aug, field.p)
        R = R.tolist()
    else:
        R, pivots = rref_rational(aug.tolist())
    if n in pivots:
        return None
    x = field.zeros(n)
    for row, pc in enumerate(pivots):
        x[pc] = R[row][n]
    return x
