"""Explicit algebra isomorphisms, checked exactly over Q or F_p.

Each witness builds a concrete linear map between two structure-constant
tables, verifies it is unital and multiplicative on every basis pair, and
verifies bijectivity by an exact rank computation.

Concrete models: ``C = C(-x^2)`` with ``i = e_0`` and ``H = C(-x^2 - y^2)``
with ``i = e_0, j = e_1, ij = e_0 e_1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Optional

import numpy as np

from . import linalg
from .clifford import (
    AlgebraElement,
    AlgebraTable,
    CliffordAlgebra,
    check_homomorphism,
    clifford,
    direct_sum,
    extend_generator_map,
    matrix_algebra,
    tensor_element,
    tensor_table,
)
from .errors import NotAHomomorphism, RelationViolated, UnknownWitness
from .fields import QQ, PrimeField
from .forms import DiagonalForm, ds_form


@dataclass
class WitnessCertificate:
    name: str
    field: object
    passed: bool
    dim: int
    matrix: Optional[np.ndarray] = dc_field(default=None, repr=False)
    failure: Optional[tuple] = None
    reason: str = ""

    def render(self) -> str:
        head = f"WITNESS {self.name} field={self.field.descriptor}"
        if self.passed:
            return f"{head} PASS dim={self.dim}"
        if self.failure is not None:
            return f"{head} FAIL relation={self.failure[0]},{self.failure[1]}"
        return f"{head} FAIL {self.reason}"

    def __str__(self):
        return self.render()


def complex_model(field) -> CliffordAlgebra:
    return clifford((-1,), field)


def quaternion_model(field) -> CliffordAlgebra:
    return clifford((-1, -1), field)


def _conclude(name, field, matrix, source: AlgebraTable, target: AlgebraTable, check_pairs=True):
    if check_pairs:
        try:
            check_homomorphism(matrix, source, target)
        except NotAHomomorphism as exc:
            return WitnessCertificate(name, field, False, source.dim, matrix, exc.pair)
    if source.dim != target.dim:
        return WitnessCertificate(name, field, False, source.dim, matrix,
                                  reason=f"dimensions {source.dim} != {target.dim}")
    r = linalg.rank(matrix, field)
    if r != source.dim:
        return WitnessCertificate(name, field, False, source.dim, matrix,
                                  reason=f"rank {r} < {source.dim}")
    return WitnessCertificate(name, field, True, source.dim, matrix)


def _from_generators(name, field, images, source, target):
    try:
        matrix = extend_generator_map(images, source, target)
    except (RelationViolated, NotAHomomorphism) as exc:
        return WitnessCertificate(name, field, False, source.dim, None, exc.pair)
    # extend_generator_map already checked every basis pair
    return _conclude(name, field, matrix, source, target, check_pairs=False)


def _half(field):
    return field.inv(field.coerce(2))


def witness_cxc(field=QQ) -> WitnessCertificate:
    """``C x C -> C (x) C`` with ``(1,0) -> (1(x)1 + i(x)i)/2``, ``(0,1) -> (1(x)1 - i(x)i)/2``."""
    Cm = complex_model(field)
    source = direct_sum(Cm, Cm)
    target = tensor_table(Cm, Cm)
    one, i = Cm.one, Cm.gen(0)
    ii = tensor_element(target, i, i)
    half = _half(field)
    u = (target.one + ii).scale(half)
    v = (target.one - ii).scale(half)
    i_left = tensor_element(target, i, one)
    images = [u, u * i_left, v, v * i_left]  # basis (1,0), (i,0), (0,1), (0,i)
    matrix = field.zeros((target.dim, source.dim))
    for col, img in enumerate(images):
        matrix[:, col] = img.vector()
    return _conclude("CxC", field, matrix, source, target)


def _sandwich_matrix(Hm: CliffordAlgebra, y: AlgebraElement, z: AlgebraElement):
    """Matrix of ``x -> y x conj(z)`` on ``H``."""
    zbar = Hm.conjugate(z)
    M = Hm.field.zeros((4, 4))
    for col in range(4):
        M[:, col] = (y * Hm.basis_element(col) * zbar).vector()
    return M


def witness_hxc(field=QQ) -> WitnessCertificate:
    """``C (x) H -> End_C(H) = C(2)`` via ``y (x) z -> (x -> y x conj(z))``.

    ``H = C + C j`` as a left C-space; a C-linear endomorphism is recorded
    by its 2x2 matrix over C in the basis ``(1, j)``.
    """
    Cm, Hm = complex_model(field), quaternion_model(field)
    source = tensor_table(Cm, Hm)
    target = tensor_table(Cm, matrix_algebra(2, field))
    embed_c = {0: 0, 1: 1}  # C basis index -> H basis index
    matrix = field.zeros((target.dim, source.dim))
    for a in range(2):
        for b in range(4):
            y = Hm.basis_element(embed_c[a])
            M = _sandwich_matrix(Hm, y, Hm.basis_element(b))
            col = field.zeros(target.dim)
            for s, h_index in enumerate((0, 2)):  # images of 1 and j
                image = M[:, h_index]
                for r in range(2):
                    # coordinates (re, im) of the C-coefficient of basis vector r
                    re, im = image[2 * r], image[2 * r + 1]
                    col[0 * 4 + 2 * r + s] = re
                    col[1 * 4 + 2 * r + s] = im
            matrix[:, a * 4 + b] = col
    return _conclude("HxC", field, matrix, source, target)


def witness_hxh(field=QQ) -> WitnessCertificate:
    """``H (x) H -> End_k(H) = k(4)`` via ``y (x) z -> (x -> y x conj(z))``."""
    Hm = quaternion_model(field)
    source = tensor_table(Hm, Hm)
    target = matrix_algebra(4, field)
    matrix = field.zeros((target.dim, source.dim))
    for a in range(4):
        for b in range(4):
            M = _sandwich_matrix(Hm, Hm.basis_element(a), Hm.basis_element(b))
            matrix[:, a * 4 + b] = M.reshape(-1)
    return _conclude("HxH", field, matrix, source, target)


def witness_abs(n: int, positive: bool, field=QQ) -> WitnessCertificate:
    """``C_{n+2}' = C_n (x) C_2'`` (positive) or ``C_{n+2} = C_n' (x) C_2``.

    ``E_0, E_1 -> 1 (x) e_0, 1 (x) e_1`` and ``E_{i+2} -> e_i (x) e_0 e_1``.
    """
    s = 1 if positive else -1
    source = clifford((s,) * (n + 2), field)
    left = clifford((-s,) * n, field)
    right = clifford((s, s), field)
    target = tensor_table(left, right)
    images = [tensor_element(target, left.one, right.gen(0)),
              tensor_element(target, left.one, right.gen(1))]
    pair = right.monomial(0, 1)
    images += [tensor_element(target, left.gen(i), pair) for i in range(n)]
    name = f"{'ABS_PLUS' if positive else 'ABS_MINUS'}[n={n}]"
    return _from_generators(name, field, images, source, target)


def witness_hyp(plus: int, minus: int, field=QQ) -> WitnessCertificate:
    """``C(q perp h) = C(q) (x) C(h)`` for ``q = Q_{plus,minus}``.

    ``e_i -> e_i (x) f_0 f_1`` and the hyperbolic generators ``-> 1 (x) f_j``.
    """
    q = (1,) * plus + (-1,) * minus
    source = clifford(q + (1, -1), field)
    left = clifford(q, field)
    right = clifford((1, -1), field)
    target = tensor_table(left, right)
    pair = right.monomial(0, 1)
    images = [tensor_element(target, left.gen(i), pair) for i in range(len(q))]
    images += [tensor_element(target, left.one, right.gen(j)) for j in range(2)]
    return _from_generators(f"HYP[{plus},{minus}]", field, images, source, target)


def witness_scaled(b, q, field=QQ) -> WitnessCertificate:
    """``C(b perp q) = C(b) (x) C((ds b) q)`` for a binary diagonal ``b``.

    ``g_j -> g_j (x) 1`` and ``e_i -> (ds b)^-1 g_0 g_1 (x) e_i``.
    """
    b = DiagonalForm(tuple(b), field)
    q = DiagonalForm(tuple(q), field)
    if b.rank != 2:
        raise ValueError("b must be binary")
    dsb = ds_form(b)
    source = clifford(b.coeffs + q.coeffs, field)
    left = clifford(b.coeffs, field)
    right = clifford(tuple(dsb * a for a in q.coeffs), field)
    target = tensor_table(left, right)
    pair = left.monomial(0, 1).scale(field.inv(dsb))
    images = [tensor_element(target, left.gen(j), right.one) for j in range(2)]
    images += [tensor_element(target, pair, right.gen(i)) for i in range(q.rank)]
    name = f"SCALED[b={_fmt(b.coeffs, field)};q={_fmt(q.coeffs, field)}]"
    return _from_generators(name, field, images, source, target)


def _fmt(coeffs, field):
    if isinstance(field, PrimeField):
        return ",".join(str(c) for c in coeffs)
    return ",".join(str(Fraction(c)) for c in coeffs)


WITNESSES = {
    "CxC": witness_cxc,
    "HxC": witness_hxc,
    "HxH": witness_hxh,
    "ABS_PLUS": lambda field=QQ, n=1: witness_abs(n, True, field),
    "ABS_MINUS": lambda field=QQ, n=1: witness_abs(n, False, field),
    "HYP": lambda field=QQ, plus=1, minus=0: witness_hyp(plus, minus, field),
    "SCALED": lambda field=QQ, b=(1, 1), q=(1,): witness_scaled(b, q, field),
}


def verify_witness_iso(name: str, field=QQ, **params) -> WitnessCertificate:
    """Run a named witness: CxC, HxC, HxH, ABS_PLUS, ABS_MINUS, HYP or SCALED."""
    try:
        build = WITNESSES[name]
    except KeyError:
        raise UnknownWitness(name) from None
    return build(field=field, **params)


BINARY_SIGN_FORMS = ((1, 1), (1, -1), (-1, 1), (-1, -1))


def witness_suite(field=QQ, max_abs: int = 6, max_hyp_rank: int = 6,
                  scaled_q=((1,), (-1, 1), (1, 1, -1))):
    """Every witness case for one field, in a fixed order."""
    yield verify_witness_iso("CxC", field)
    yield verify_witness_iso("HxC", field)
    yield verify_witness_iso("HxH", field)
    for n in range(max_abs + 1):
        yield verify_witness_iso("ABS_PLUS", field, n=n)
        yield verify_witness_iso("ABS_MINUS", field, n=n)
    for r in range(max_hyp_rank + 1):
        for minus in range(r + 1):
            yield verify_witness_iso("HYP", field, plus=r - minus, minus=minus)
    for b in BINARY_SIGN_FORMS:
        for q in scaled_q:
            yield verify_witness_iso("SCALED", field, b=b, q=q)
