import numpy as np
import pytest

from _oracles import brute_center_dim_mod_p
from quadric_k0.clifford import AlgebraTable, clifford, direct_sum, matrix_algebra, scalar_algebra, tensor_table
from quadric_k0.errors import CenterTooLarge, NotSemisimple
from quadric_k0.fields import QQ, PrimeField
from quadric_k0.wedderburn import (
    SimpleFactor,
    center_basis,
    center_structure,
    central_idempotents,
    classify,
    trace_form_rank,
)


def dense(A):
    """Full (dim, dim, dim) structure constants from a monomial table."""
    T = np.zeros((A.dim,) * 3, dtype=np.int64)
    for i in range(A.dim):
        for j in range(A.dim):
            T[i, j, A.index[i, j]] = int(A.coef[i, j])
    return T


def dual_numbers(F):
    """F[x]/(x^2): the smallest non-semisimple algebra."""
    index = np.array([[0, 1], [1, 0]])
    coef = np.array([[1, 1], [1, 0]], dtype=np.int64)
    return AlgebraTable(F, index, coef, np.array([1, 0], dtype=np.int64), name="dual")


@pytest.mark.parametrize("A, expected", [
    (matrix_algebra(2, PrimeField(7)), 1),
    (clifford((1,), PrimeField(7)), 2),
    (clifford((1, -1), PrimeField(5)), 1),
    (clifford((-1, -1, -1), PrimeField(7)), 2),
    (clifford((1, 1, 1, 1), PrimeField(11)), 1),
    (tensor_table(clifford((-1,), PrimeField(7)), matrix_algebra(2, PrimeField(7))), 2),
])
def test_center_dimension(A, expected):
    assert len(center_basis(A)) == expected
    assert brute_center_dim_mod_p(dense(A), A.field.p) == expected


def test_center_elements_commute_with_everything():
    A = clifford((1, 2, 3), PrimeField(13))
    for z in center_basis(A):
        for b in range(A.dim):
            x = A.basis_vector(b)
            assert np.array_equal(A.mul(z, x), A.mul(x, z))


def test_center_over_rationals():
    assert len(center_basis(clifford((1, 1, 1), QQ))) == 2
    assert len(center_basis(clifford((1, 1), QQ))) == 1


@pytest.mark.parametrize("A, expected", [
    (matrix_algebra(2, PrimeField(7)), 4),
    (clifford((1, 1), PrimeField(5)), 4),
    (dual_numbers(PrimeField(5)), 1),
])
def test_trace_form_rank(A, expected):
    assert trace_form_rank(A) == expected


def is_idempotent(A, e):
    return np.array_equal(A.mul(e, e), e % A.field.p)


def test_idempotents_split_center():
    A = clifford((1,), PrimeField(7))
    got = sorted(tuple(int(x) for x in e) for e in central_idempotents(A))
    assert got == [(4, 3), (4, 4)]  # (1 -+ e)/2 mod 7


def test_idempotents_when_minus_one_is_square():
    A = clifford((-1,), PrimeField(13))
    ids = central_idempotents(A)
    assert sorted(tuple(int(x) for x in e) for e in ids) == [(7, 4), (7, 9)]
    for e in ids:
        assert is_idempotent(A, e)
    assert np.array_equal((ids[0] + ids[1]) % 13, A.unit)
    assert not np.any(A.mul(ids[0], ids[1]))


def test_no_idempotents_for_field_extension():
    s = center_structure(clifford((-1,), PrimeField(7)))
    assert s.center_degree == 2
    assert len(s.idempotents) == 1


@pytest.mark.parametrize("coeffs, p, factors", [
    ((1, 1, 1), 5, (SimpleFactor(2, 1), SimpleFactor(2, 1))),
    ((1, 1, 1), 7, (SimpleFactor(2, 2),)),
    ((1, -1), 11, (SimpleFactor(2, 1),)),
    ((-1,), 7, (SimpleFactor(1, 2),)),
    ((-1, -1), 7, (SimpleFactor(2, 1),)),
    ((-1,) * 4, 19, (SimpleFactor(4, 1),)),
])
def test_classify_examples(coeffs, p, factors):
    report = classify(clifford(coeffs, PrimeField(p)))
    assert report.factors == factors
    assert report.dim == 2 ** len(coeffs)
    assert report.trace_form_rank == 2 ** len(coeffs)


def test_classify_matrix_algebras():
    for n in (1, 2, 3):
        assert classify(matrix_algebra(n, PrimeField(5))).factors == (SimpleFactor(n, 1),)


def test_errors():
    F = PrimeField(5)
    k = scalar_algebra(F)
    with pytest.raises(CenterTooLarge):
        classify(direct_sum(direct_sum(k, k), k))
    with pytest.raises(NotSemisimple):
        classify(dual_numbers(F))
    with pytest.raises(TypeError):
        classify(clifford((1,), QQ))
