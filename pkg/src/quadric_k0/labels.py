"""Symbolic Clifford-algebra labels and the reduced K_0 of R_{n,m}.

A label ``(base, t, split)`` names ``M_{2^t}(D)`` (or two copies of it
when ``split``), where ``D`` is the ground field ``K``, the quadratic
extension ``C = k[x]/(x^2+1)`` or the quaternions ``H = (-1,-1)/k``.
Which bases survive depends on the :class:`FieldProfile`:

* ``SQRT_MINUS_ONE``: ``C = K x K`` and ``H = K(2)``, so only ``K``.
* ``SUM_TWO_SQUARES``: ``H = K(2)``; ``C`` stays a field.
* ``QUATERNION_DIVISION``: all three.

Matrix sizes and module dimensions are carried as base-2 exponents.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from functools import lru_cache

from .errors import EmptyForm, InternalError, SplitTensorSplit
from .fields import FieldProfile
from .forms import SignatureForm, ds_is_square, hyperbolic_reduce


class Base(enum.Enum):
    K = "K"
    C = "C"
    H = "H"

    @property
    def log2_degree(self) -> int:
        """``log2 dim_k`` of the division algebra."""
        return {"K": 0, "C": 1, "H": 2}[self.value]


class K0Class(enum.Enum):
    Z = "Z"
    Z_MOD_2 = "Z/2"
    ZERO = "0"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class AlgebraLabel:
    base: Base
    log2size: int = 0
    split: bool = False

    @property
    def dim_log2(self) -> int:
        """``log2`` of the k-dimension."""
        return self.base.log2_degree + 2 * self.log2size + (1 if self.split else 0)

    def render(self) -> str:
        """``K(2^t)`` style rendering with the size written out, ``^2`` when split."""
        out = f"{self.base.value}({1 << self.log2size})"
        return out + "^2" if self.split else out

    def __str__(self):
        return self.render()


K = Base.K
C = Base.C
H = Base.H


def normalize_label(profile: FieldProfile, raw: AlgebraLabel) -> AlgebraLabel:
    """Apply the profile's collapses; idempotent."""
    label = raw
    if profile is FieldProfile.QUATERNION_DIVISION:
        return label
    if label.base is H:
        label = AlgebraLabel(K, label.log2size + 1, label.split)
    if profile is FieldProfile.SQRT_MINUS_ONE and label.base is C:
        if label.split:
            raise SplitTensorSplit(f"{raw} would have four simple factors")
        label = AlgebraLabel(K, label.log2size, True)
    return label


# base product table: (result base, extra log2size, result splits)
_BASE_PRODUCTS = {
    (K, K): (K, 0, False),
    (K, C): (C, 0, False),
    (K, H): (H, 0, False),
    (C, C): (C, 0, True),
    (C, H): (C, 1, False),
    (H, H): (K, 2, False),
}


def tensor_labels(profile: FieldProfile, a: AlgebraLabel, b: AlgebraLabel) -> AlgebraLabel:
    a = normalize_label(profile, a)
    b = normalize_label(profile, b)
    if a.split and b.split:
        raise SplitTensorSplit(f"{a} (x) {b}")
    key = (a.base, b.base) if (a.base, b.base) in _BASE_PRODUCTS else (b.base, a.base)
    base, extra, splits = _BASE_PRODUCTS[key]
    if splits and (a.split or b.split):
        raise SplitTensorSplit(f"{a} (x) {b}")
    out = AlgebraLabel(base, a.log2size + b.log2size + extra, a.split or b.split or splits)
    return normalize_label(profile, out)


_BASES = {
    "rank0": AlgebraLabel(K),
    "q1": AlgebraLabel(C),
    "q2": AlgebraLabel(H),
    "q1'": AlgebraLabel(K, 0, True),
    "q2'": AlgebraLabel(K, 1),
}


def base_clifford(profile: FieldProfile, which: str) -> AlgebraLabel:
    """Labels of ``C(q)`` for ``q`` among ``rank0``, ``q1``, ``q2``, ``q1'``, ``q2'``.

    ``q_n`` is the negative definite form, ``q_n'`` the positive one.
    """
    try:
        raw = _BASES[which]
    except KeyError:
        raise ValueError(f"unknown base form {which!r}") from None
    return normalize_label(profile, raw)


@lru_cache(maxsize=None)
def definite_clifford(profile: FieldProfile, k: int, positive: bool) -> AlgebraLabel:
    """``C(q_k')`` (positive) or ``C(q_k)`` (negative), descending by two.

    ``C_{k}' = C_{k-2} (x) C_2'`` and ``C_{k} = C_{k-2}' (x) C_2``.
    """
    if k < 0:
        raise ValueError("negative rank")
    # peel pairs until rank <= 2, remembering which factors were split off
    factors = []
    sign = positive
    while k > 2:
        factors.append(base_clifford(profile, "q2'" if sign else "q2"))
        sign = not sign
        k -= 2
    if k == 0:
        label = base_clifford(profile, "rank0")
    else:
        label = base_clifford(profile, f"q{k}'" if sign else f"q{k}")
    for factor in factors:
        label = tensor_labels(profile, label, factor)
    return label


def clifford_of_signature(profile: FieldProfile, n: int, m: int) -> AlgebraLabel:
    """Label of ``C(Q_{n,m})`` via hyperbolic splitting and the definite recursion."""
    core, h_count = hyperbolic_reduce(SignatureForm(n, m))
    if core.minus:
        label = definite_clifford(profile, core.minus, False)
    else:
        label = definite_clifford(profile, core.plus, True)
    return tensor_labels(profile, label, AlgebraLabel(K, h_count))


def simple_dim(label: AlgebraLabel) -> int:
    """``log2`` of the k-dimension of a simple module."""
    return label.base.log2_degree + label.log2size


def ds_square_test(profile: FieldProfile, n: int, m: int) -> bool:
    return ds_is_square(profile, SignatureForm(n, m))


@dataclass(frozen=True)
class ABSResult:
    """Answer plus the data it was decided from."""

    profile: FieldProfile
    plus: int
    minus: int
    k0: K0Class
    label: AlgebraLabel
    perp_label: AlgebraLabel
    d_log2: int
    dperp_log2: int
    ds_square: bool

    @property
    def d(self) -> int:
        return 1 << self.d_log2

    @property
    def dperp(self) -> int:
        return 1 << self.dperp_log2


def _check_nonempty(n, m):
    if n < 0 or m < 0:
        raise ValueError(f"negative signature ({n}, {m})")
    if n + m == 0:
        raise EmptyForm("R_{0,0} is the zero ring")


def abs_group(profile: FieldProfile, n: int, m: int) -> ABSResult:
    """``~K_0(R_{n,m})`` from the split/simple dichotomy and ``d(q)`` vs ``d(q perp 1)``."""
    _check_nonempty(n, m)
    label = clifford_of_signature(profile, n, m)
    perp = clifford_of_signature(profile, n + 1, m)
    d, dperp = simple_dim(label), simple_dim(perp)
    if label.split:
        k0 = K0Class.Z
    elif dperp == d:
        k0 = K0Class.ZERO
    elif dperp == d + 1:
        k0 = K0Class.Z_MOD_2
    else:
        raise InternalError(f"d(q perp 1)/d(q) = 2^{dperp - d} for ({n}, {m})")
    return ABSResult(profile, n, m, k0, label, perp, d, dperp, ds_square_test(profile, n, m))


_QD_PLUS = {1: K0Class.Z, 5: K0Class.Z, 2: K0Class.Z_MOD_2, 3: K0Class.Z_MOD_2}
_QD_MINUS = {3: K0Class.Z, 7: K0Class.Z, 5: K0Class.Z_MOD_2, 6: K0Class.Z_MOD_2}
_S2_PLUS = {1: K0Class.Z, 2: K0Class.Z_MOD_2}
_S2_MINUS = {3: K0Class.Z, 2: K0Class.Z_MOD_2}


def closed_form_k0(profile: FieldProfile, n: int, m: int) -> K0Class:
    """Periodic closed forms in ``n - m`` (or the parity of ``n + m`` at level 1)."""
    _check_nonempty(n, m)
    if profile is FieldProfile.SQRT_MINUS_ONE:
        return K0Class.Z if (n + m) % 2 else K0Class.ZERO
    if profile is FieldProfile.QUATERNION_DIVISION:
        period, plus_table, minus_table = 8, _QD_PLUS, _QD_MINUS
    else:
        # n - m = 2 mod 4 gives Z/2 and 0 mod 4 gives 0, as forced by the
        # level-2 Clifford table (C'_2 = k(2) while C'_3 = C(2)).
        period, plus_table, minus_table = 4, _S2_PLUS, _S2_MINUS
    if n >= m:
        return plus_table.get((n - m) % period, K0Class.ZERO)
    return minus_table.get((m - n) % period, K0Class.ZERO)


def with_size(label: AlgebraLabel, shift: int) -> AlgebraLabel:
    return replace(label, log2size=label.log2size + shift)
