"""Structure-constant Clifford algebras and other monomial algebra tables.

Every algebra handled here has a *monomial* basis: the product of two
basis elements is a scalar multiple (possibly zero) of a single basis
element.  This covers Clifford algebras on the subset basis, full matrix
algebras on matrix units, tensor products and direct sums of those.  A
table therefore stores two ``dim x dim`` arrays, ``index[i, j]`` and
``coef[i, j]``, with ``b_i b_j = coef[i, j] * b_{index[i, j]}``.

Clifford basis elements are indexed by bitmask: bit ``i`` set means the
generator ``e_i`` (0-based) occurs in the ascending product.
"""

from __future__ import annotations

import os
from collections.abc import Sequence
from typing import Optional

import numpy as np

from .errors import DimensionCapExceeded, FieldError, NotAHomomorphism, RelationViolated
from .fields import PrimeField
from .forms import DiagonalForm

DEFAULT_RANK_CAP = 12


def rank_cap() -> int:
    """Largest Clifford rank the engine will build (``QK0_RANK_CAP`` overrides)."""
    raw = os.environ.get("QK0_RANK_CAP")
    if raw is None:
        return DEFAULT_RANK_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"QK0_RANK_CAP must be an integer, got {raw!r}") from None


def dimension_cap() -> int:
    return 1 << rank_cap()


def _check_dim(dim: int):
    if dim > dimension_cap():
        raise DimensionCapExceeded(f"dimension {dim} exceeds cap {dimension_cap()}")


def reorder_parity(S: int, T: int) -> int:
    """Parity of transpositions needed to sort ``e_S e_T`` into ascending order.

    Counts, for each generator ``j`` in ``T``, the generators of ``S``
    strictly above it.
    """
    parity = 0
    T_rest = T
    while T_rest:
        low = T_rest & -T_rest
        j = low.bit_length() - 1
        parity ^= (S >> (j + 1)).bit_count() & 1
        T_rest ^= low
    return parity


def sign_parity_table(rank: int) -> np.ndarray:
    """``reorder_parity(S, T)`` for all pairs, as a ``uint8`` array."""
    dim = 1 << rank
    _check_dim(dim)
    S = np.arange(dim, dtype=np.uint32)
    parity = np.zeros((dim, dim), dtype=np.uint8)
    for j in range(rank):
        above = (np.bitwise_count(S >> (j + 1)) & 1).astype(np.uint8)
        has_j = ((S >> j) & 1).astype(np.uint8)
        parity ^= above[:, None] & has_j[None, :]
    return parity


class AlgebraTable:
    """Finite-dimensional associative algebra with a monomial basis."""

    def __init__(self, field, index, coef, unit, generators=None, name: str = ""):
        index = np.asarray(index)
        dim = index.shape[0]
        _check_dim(dim)
        if index.shape != (dim, dim) or np.shape(coef) != (dim, dim):
            raise ValueError("structure arrays must be dim x dim")
        self.field = field
        self.dim = dim
        self.index = index
        self.coef = field.reduce(np.asarray(coef, dtype=field.dtype))
        self.unit = field.reduce(np.asarray(unit, dtype=field.dtype))
        self.name = name
        self._generators = generators
        self._index_list = None
        self._coef_list = None

    # -- vectors and elements ---------------------------------------------
    def basis_vector(self, i: int):
        v = self.field.zeros(self.dim)
        v[i] = self.field.one
        return v

    def element(self, coeffs) -> AlgebraElement:
        """Wrap a dense vector or a ``{basis_index: scalar}`` mapping."""
        if isinstance(coeffs, dict):
            return AlgebraElement(self, coeffs)
        return AlgebraElement.from_vector(self, coeffs)

    def basis_element(self, i: int) -> AlgebraElement:
        return AlgebraElement(self, {i: self.field.one})

    @property
    def one(self) -> AlgebraElement:
        return self.element(self.unit)

    @property
    def generators(self) -> list:
        """Vectors generating the algebra (default: the whole basis)."""
        if self._generators is None:
            return [self.basis_vector(i) for i in range(self.dim)]
        return [self.field.reduce(np.asarray(g, dtype=self.field.dtype)) for g in self._generators]

    def _lists(self):
        if self._index_list is None:
            self._index_list = self.index.tolist()
            self._coef_list = self.coef.tolist()
        return self._index_list, self._coef_list

    # -- products -----------------------------------------------------------
    def basis_product(self, i: int, j: int):
        v = self.field.zeros(self.dim)
        v[self.index[i, j]] = self.coef[i, j]
        return v

    def mul(self, x, y):
        """Product of two dense coordinate vectors."""
        f = self.field
        ix = np.flatnonzero(x)
        iy = np.flatnonzero(y)
        out = f.zeros(self.dim)
        if ix.size == 0 or iy.size == 0:
            return out
        sub = self.coef[np.ix_(ix, iy)]
        vals = f.reduce(f.reduce(np.multiply.outer(x[ix], y[iy])) * sub)
        np.add.at(out, self.index[np.ix_(ix, iy)].ravel(), vals.ravel())
        return f.reduce(out)

    def mul_sparse(self, x: dict, y: dict) -> dict:
        index, coef = self._lists()
        f = self.field
        out = {}
        for i, a in x.items():
            row_i, row_c = index[i], coef[i]
            for j, b in y.items():
                c = row_c[j]
                if c == 0:
                    continue
                k = row_i[j]
                out[k] = out.get(k, 0) + a * b * c
        return _clean(f, out)

    def left_matrix(self, x):
        """Matrix of ``y -> x y`` in the table basis."""
        f = self.field
        M = f.zeros((self.dim, self.dim))
        cols = np.arange(self.dim)
        for i in np.flatnonzero(x):
            np.add.at(M, (self.index[i], cols), f.reduce(x[i] * self.coef[i]))
        return f.reduce(M)

    def right_matrix(self, x):
        """Matrix of ``y -> y x`` in the table basis."""
        f = self.field
        M = f.zeros((self.dim, self.dim))
        rows = np.arange(self.dim)
        for i in np.flatnonzero(x):
            np.add.at(M, (self.index[:, i], rows), f.reduce(x[i] * self.coef[:, i]))
        return f.reduce(M)

    def dump(self) -> str:
        """One line per basis pair: ``i j -> c_0,...,c_{dim-1}``."""
        lines = []
        for i in range(self.dim):
            for j in range(self.dim):
                v = self.basis_product(i, j)
                lines.append(f"{i} {j} -> " + ",".join(str(c) for c in v))
        return "\n".join(lines) + "\n"

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<AlgebraTable{label} dim={self.dim} over {self.field}>"


def _clean(field, coeffs: dict) -> dict:
    out = {}
    for k, v in coeffs.items():
        v = field.coerce(v)
        if not field.is_zero(v):
            out[k] = v
    return out


class AlgebraElement:
    """Sparse element of an :class:`AlgebraTable`; zero coefficients are never stored."""

    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra: AlgebraTable, coeffs: dict):
        self.algebra = algebra
        self.coeffs = _clean(algebra.field, coeffs)

    @classmethod
    def from_vector(cls, algebra, vec):
        return cls(algebra, {int(i): vec[i] for i in np.flatnonzero(vec)})

    def vector(self):
        v = self.algebra.field.zeros(self.algebra.dim)
        for k, c in self.coeffs.items():
            v[k] = c
        return v

    def _same(self, other):
        if not isinstance(other, AlgebraElement):
            return False
        if other.algebra is not self.algebra:
            raise FieldError("elements of different algebras")
        return True

    def __add__(self, other):
        if not self._same(other):
            return NotImplemented
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return AlgebraElement(self.algebra, out)

    def __neg__(self):
        f = self.algebra.field
        return AlgebraElement(self.algebra, {k: f.neg(c) for k, c in self.coeffs.items()})

    def __sub__(self, other):
        if not self._same(other):
            return NotImplemented
        return self + (-other)

    def scale(self, s):
        s = self.algebra.field.coerce(s)
        return AlgebraElement(self.algebra, {k: c * s for k, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._same(other)
            return AlgebraElement(self.algebra, self.algebra.mul_sparse(self.coeffs, other.coeffs))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return other.algebra is self.algebra and other.coeffs == self.coeffs
        if other == 0:
            return not self.coeffs
        return NotImplemented

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}*b{k}" for k, c in sorted(self.coeffs.items()))


# ---------------------------------------------------------------------------
# Clifford algebras


class CliffordAlgebra(AlgebraTable):
    """``C(q)`` for a diagonal form ``q``: ``e_i^2 = a_i``, ``e_i e_j = -e_j e_i``."""

    def __init__(self, form: DiagonalForm, name: str = ""):
        rank = form.rank
        if rank > rank_cap():
            raise DimensionCapExceeded(f"rank {rank} exceeds cap {rank_cap()}")
        self.form = form
        self.rank = rank
        field = form.field
        dim = 1 << rank
        S = np.arange(dim, dtype=np.int64)[:, None]
        T = np.arange(dim, dtype=np.int64)[None, :]
        index = (S ^ T).astype(np.int32)
        parity = sign_parity_table(rank)
        # product of a_i over every subset, then looked up at S & T
        subset_prod = [field.one]
        for a in form.coeffs:
            subset_prod += [field.coerce(c * a) for c in subset_prod]
        subset_prod = np.array(subset_prod, dtype=field.dtype)
        negated = np.array([field.neg(c) for c in subset_prod], dtype=field.dtype)
        both = (S & T)
        coef = np.where(parity == 1, negated[both], subset_prod[both])
        unit = field.zeros(dim)
        unit[0] = field.one
        gens = [np.eye(1, dim, 1 << i, dtype=np.int64)[0] for i in range(rank)]
        super().__init__(field, index, coef, unit, generators=gens,
                         name=name or f"C{tuple(form.coeffs)}")

    def basis_mul(self, S: int, T: int):
        """``e_S e_T = scalar * e_U`` as ``(scalar, U)``."""
        f = self.field
        scalar = f.coerce(-1) if reorder_parity(S, T) else f.one
        both = S & T
        for i, a in enumerate(self.form.coeffs):
            if (both >> i) & 1:
                scalar = f.coerce(scalar * a)
        return scalar, S ^ T

    def gen(self, i: int) -> AlgebraElement:
        """The generator ``e_i`` (0-based)."""
        return self.basis_element(1 << i)

    def monomial(self, *gens: int) -> AlgebraElement:
        """Product ``e_{i_1} ... e_{i_k}`` in the given order."""
        out = self.one
        for i in gens:
            out = out * self.gen(i)
        return out

    def conjugate(self, x: AlgebraElement) -> AlgebraElement:
        """Negate every non-unit coefficient (quaternion-style conjugation)."""
        f = self.field
        return AlgebraElement(self, {k: (c if k == 0 else f.neg(c)) for k, c in x.coeffs.items()})


def clifford(coeffs, field) -> CliffordAlgebra:
    return CliffordAlgebra(DiagonalForm(tuple(coeffs), field))


def clifford_of_signature(plus: int, minus: int, field) -> CliffordAlgebra:
    """``C(Q_{plus,minus})`` with the +1 generators first."""
    return CliffordAlgebra(DiagonalForm(tuple([1] * plus + [-1] * minus), field),
                           name=f"C(Q_{plus},{minus})")


# ---------------------------------------------------------------------------
# Other tables


def matrix_algebra(n: int, field) -> AlgebraTable:
    """``k(n)`` on matrix units ``E_ab`` (index ``a*n + b``)."""
    dim = n * n
    _check_dim(dim)
    a = np.arange(n)
    A, B, C, D = np.meshgrid(a, a, a, a, indexing="ij")
    index = (A * n + D).reshape(dim, dim)
    coef = (B == C).astype(np.int64).reshape(dim, dim)
    if field.dtype is object:
        coef = field.array(coef)
    unit = field.zeros(dim)
    for i in range(n):
        unit[i * n + i] = field.one
    return AlgebraTable(field, index, coef, unit, name=f"k({n})")


def scalar_algebra(field) -> AlgebraTable:
    return AlgebraTable(field, np.zeros((1, 1), dtype=np.int64), field.array([[1]]),
                        field.array([1]), name="k")


def tensor_table(A: AlgebraTable, B: AlgebraTable) -> AlgebraTable:
    """Ungraded tensor product; basis ``(i, j) -> i * B.dim + j``."""
    if A.field != B.field:
        raise FieldError("tensor product over different fields")
    f = A.field
    dA, dB = A.dim, B.dim
    _check_dim(dA * dB)
    index = (A.index.astype(np.int64)[:, None, :, None] * dB
             + B.index.astype(np.int64)[None, :, None, :]).reshape(dA * dB, dA * dB)
    coef = f.reduce(A.coef[:, None, :, None] * B.coef[None, :, None, :]).reshape(dA * dB, dA * dB)
    unit = f.reduce(np.multiply.outer(A.unit, B.unit).reshape(-1))
    gens = ([np.multiply.outer(g, B.unit).reshape(-1) for g in A.generators]
            + [np.multiply.outer(A.unit, g).reshape(-1) for g in B.generators])
    table = AlgebraTable(f, index.astype(np.int32), coef, unit, generators=gens,
                         name=f"({A.name} (x) {B.name})")
    table.factors = (A, B)
    return table


def tensor_element(T: AlgebraTable, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """``x (x) y`` inside ``T = tensor_table(A, B)``."""
    A, B = T.factors
    if x.algebra is not A or y.algebra is not B:
        raise FieldError("factors do not match the tensor table")
    out = {}
    for i, a in x.coeffs.items():
        for j, b in y.coeffs.items():
            out[i * B.dim + j] = a * b
    return AlgebraElement(T, out)


def direct_sum(A: AlgebraTable, B: AlgebraTable) -> AlgebraTable:
    """``A x B`` with the basis of ``A`` first."""
    if A.field != B.field:
        raise FieldError("direct sum over different fields")
    f = A.field
    dA, dB = A.dim, B.dim
    dim = dA + dB
    index = np.zeros((dim, dim), dtype=np.int64)
    coef = f.zeros((dim, dim))
    index[:dA, :dA] = A.index
    coef[:dA, :dA] = A.coef
    index[dA:, dA:] = B.index + dA
    coef[dA:, dA:] = B.coef
    unit = np.concatenate([A.unit, B.unit])
    zA, zB = f.zeros(dA), f.zeros(dB)
    gens = ([np.concatenate([A.unit, zB])]
            + [np.concatenate([g, zB]) for g in A.generators]
            + [np.concatenate([zA, g]) for g in B.generators])
    return AlgebraTable(f, index, coef, unit, generators=gens, name=f"({A.name} + {B.name})")


class RegularRepresentation(Sequence):
    """Lazy sequence of left-multiplication matrices ``L_{b_i}``."""

    def __init__(self, table: AlgebraTable):
        _check_dim(table.dim)
        self.table = table

    def __len__(self):
        return self.table.dim

    def __getitem__(self, i):
        if isinstance(i, slice):
            return [self[k] for k in range(*i.indices(len(self)))]
        if not -len(self) <= i < len(self):
            raise IndexError(i)
        return self.table.left_matrix(self.table.basis_vector(i % len(self)))

    def of(self, x):
        """``L_x`` for a dense vector or :class:`AlgebraElement`."""
        if isinstance(x, AlgebraElement):
            x = x.vector()
        return self.table.left_matrix(x)


def regular_representation(table: AlgebraTable) -> RegularRepresentation:
    return RegularRepresentation(table)


# ---------------------------------------------------------------------------
# Generator maps


def extend_generator_map(images, source: CliffordAlgebra, target: AlgebraTable,
                         check_all_pairs: bool = True):
    """Extend ``e_i -> images[i]`` to the linear map ``C(q) -> target``.

    The images must satisfy the Clifford relations of ``source``; the
    resulting matrix (``target.dim x source.dim``, column ``S`` is the
    image of ``e_S``) is then re-verified to be multiplicative on every
    basis pair.
    """
    f = target.field
    if source.field != f:
        raise FieldError("source and target over different fields")
    images = [img if isinstance(img, AlgebraElement) else target.element(img) for img in images]
    if len(images) != source.rank:
        raise ValueError(f"need {source.rank} images, got {len(images)}")
    one = target.one
    for i, (img, a) in enumerate(zip(images, source.form.coeffs)):
        if img * img != one.scale(a):
            raise RelationViolated((i, i))
    for i in range(source.rank):
        for j in range(i + 1, source.rank):
            if not (images[i] * images[j] + images[j] * images[i]).is_zero():
                raise RelationViolated((i, j))

    columns = [one]
    for S in range(1, source.dim):
        top = S.bit_length() - 1
        columns.append(columns[S ^ (1 << top)] * images[top])

    if check_all_pairs:
        src_index, src_coef = source._lists()
        for S in range(source.dim):
            for T in range(source.dim):
                lhs = columns[S] * columns[T]
                rhs = columns[src_index[S][T]].scale(src_coef[S][T])
                if lhs != rhs:
                    raise NotAHomomorphism((S, T))

    matrix = f.zeros((target.dim, source.dim))
    for S, col in enumerate(columns):
        for k, c in col.coeffs.items():
            matrix[k, S] = c
    return matrix


def check_homomorphism(matrix, source: AlgebraTable, target: AlgebraTable):
    """Verify a linear map given by its matrix is unital and multiplicative.

    Raises :class:`NotAHomomorphism` with the first failing basis pair;
    ``(-1, -1)`` flags a non-unital map.
    """
    cols = [target.element(matrix[:, j]) for j in range(source.dim)]
    image_of_unit = AlgebraElement(target, {})
    for j, c in AlgebraElement.from_vector(source, source.unit).coeffs.items():
        image_of_unit = image_of_unit + cols[j].scale(c)
    if image_of_unit != target.one:
        raise NotAHomomorphism((-1, -1), "unit is not preserved")
    src_index, src_coef = source._lists()
    for i in range(source.dim):
        for j in range(source.dim):
            if cols[i] * cols[j] != cols[src_index[i][j]].scale(src_coef[i][j]):
                raise NotAHomomorphism((i, j))


def embed(matrix, x: AlgebraElement, target: AlgebraTable) -> Optional[AlgebraElement]:
    """Apply a linear map (given by its matrix) to a sparse element."""
    out = target.field.zeros(target.dim)
    for j, c in x.coeffs.items():
        out = target.field.reduce(out + matrix[:, j] * c)
    return target.element(out)
