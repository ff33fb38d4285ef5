"""Brute-force Wedderburn classification of semisimple algebras over F_p.

Only algebras whose center has dimension 1 or 2 are handled, which is
all that Clifford algebras (and their tensor products with matrix
algebras) ever produce.  Semisimplicity is certified by a nondegenerate
trace form before anything else is computed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

import numpy as np

from . import linalg
from .clifford import AlgebraTable
from .errors import CenterTooLarge, NotAPerfectSquare, NotSemisimple
from .fields import PrimeField, Residue, is_square, sqrt_mod_p


@dataclass(frozen=True)
class SimpleFactor:
    """``M_m(F_{p^e})`` with ``m = matrix_size`` and ``e = center_degree``."""

    matrix_size: int
    center_degree: int

    @property
    def simple_module_dim(self) -> int:
        return self.matrix_size * self.center_degree

    @property
    def dim(self) -> int:
        return self.matrix_size ** 2 * self.center_degree


@dataclass(frozen=True)
class WedderburnReport:
    factors: tuple
    trace_form_rank: int

    @property
    def dim(self) -> int:
        return sum(f.dim for f in self.factors)

    @property
    def is_split(self) -> bool:
        return len(self.factors) == 2


@dataclass
class CenterStructure:
    basis: list
    idempotents: list
    center_degree: int = 1
    discriminant: int | None = None
    central_element: object = field(default=None, repr=False)


def center_basis(A: AlgebraTable) -> list:
    """Basis of the center as dense vectors.

    The center is the common kernel of ``L_g - R_g`` over a generating set,
    intersected one generator at a time.
    """
    f = A.field
    N = np.eye(A.dim, dtype=np.int64) if f.dtype is not object else f.array(np.eye(A.dim, dtype=np.int64))
    for g in A.generators:
        M = f.reduce(A.left_matrix(g) - A.right_matrix(g))
        K = f.reduce(M @ N)
        null = linalg.nullspace(K, f)
        if null.shape[0] == 0:
            return []
        N = f.reduce(N @ null.T)
    return [N[:, k].copy() for k in range(N.shape[1])]


def trace_form_rank(A: AlgebraTable) -> int:
    """Rank of the Gram matrix of ``(x, y) -> trace(L_x L_y)``."""
    f = A.field
    dim = A.dim
    cols = np.arange(dim)
    diag = A.index == cols[None, :]
    traces = f.reduce(np.where(diag, A.coef, 0).sum(axis=1))
    gram = f.reduce(A.coef * traces[A.index])
    return linalg.rank(gram, f)


def _require_prime_field(A):
    if not isinstance(A.field, PrimeField):
        raise TypeError("Wedderburn classification needs an F_p table")


def center_structure(A: AlgebraTable) -> CenterStructure:
    """Center basis, central idempotents and the center's degree over F_p."""
    _require_prime_field(A)
    p = A.field.p
    if trace_form_rank(A) != A.dim:
        raise NotSemisimple("trace form is degenerate")
    basis = center_basis(A)
    z = len(basis)
    unit = A.unit
    if z == 1:
        return CenterStructure(basis, [unit.copy()])
    if z > 2:
        raise CenterTooLarge(f"center has dimension {z}")

    # a central element outside the scalars
    c = next(v for v in basis if linalg.rank_mod_p(np.stack([unit, v]), p) == 2)
    c2 = A.mul(c, c)
    coeffs = linalg.solve(np.stack([c, unit], axis=1), c2, A.field)
    alpha, beta = int(coeffs[0]), int(coeffs[1])
    disc = (alpha * alpha + 4 * beta) % p
    F = A.field
    if disc == 0:
        raise NotSemisimple("center contains a nilpotent element")
    if not is_square(Residue(disc, F)):
        return CenterStructure(basis, [unit.copy()], center_degree=2, discriminant=disc,
                               central_element=c)
    r = sqrt_mod_p(Residue(disc, F)).value
    # roots (alpha +- r)/2; e = (c - root2) / r projects onto the root1 eigenspace
    root2 = (alpha - r) * F.inv(2) % p
    e1 = (c - root2 * unit) * F.inv(r) % p
    e2 = (unit - e1) % p
    return CenterStructure(basis, [e1, e2], center_degree=1, discriminant=disc, central_element=c)


def central_idempotents(A: AlgebraTable) -> list:
    return center_structure(A).idempotents


def _matrix_size(dim_block: int, degree: int) -> int:
    if dim_block % degree:
        raise NotAPerfectSquare(f"block dimension {dim_block} not divisible by {degree}")
    m = isqrt(dim_block // degree)
    if m * m * degree != dim_block:
        raise NotAPerfectSquare(f"block dimension {dim_block}/{degree} is not a square")
    return m


def classify(A: AlgebraTable) -> WedderburnReport:
    _require_prime_field(A)
    structure = center_structure(A)
    trank = A.dim  # certified by center_structure
    if len(structure.idempotents) == 1:
        e = structure.center_degree
        factors = (SimpleFactor(_matrix_size(A.dim, e), e),)
    else:
        factors = []
        for idem in structure.idempotents:
            d_block = linalg.rank_mod_p(A.left_matrix(idem), A.field.p)
            factors.append(SimpleFactor(_matrix_size(d_block, 1), 1))
        factors = tuple(factors)
    return WedderburnReport(factors, trank)
