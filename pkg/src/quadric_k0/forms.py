"""Diagonal quadratic forms and the signature-level reductions.

The symbolic pipeline only sees forms with +/-1 coefficients, recorded as
a :class:`SignatureForm` ``(plus, minus)`` standing for
``x_1^2 + ... + x_plus^2 - y_1^2 - ... - y_minus^2``.  General
:class:`DiagonalForm` instances carry concrete coefficients for the engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Union

from .errors import FieldError, ZeroScalar
from .fields import FieldProfile, PrimeField, RationalField, QQ


@dataclass(frozen=True)
class SignatureForm:
    plus: int
    minus: int

    def __post_init__(self):
        if self.plus < 0 or self.minus < 0:
            raise ValueError(f"negative signature ({self.plus}, {self.minus})")

    @property
    def rank(self) -> int:
        return self.plus + self.minus

    @property
    def is_definite(self) -> bool:
        return self.plus == 0 or self.minus == 0

    def perp(self, other: SignatureForm) -> SignatureForm:
        return SignatureForm(self.plus + other.plus, self.minus + other.minus)

    def diagonal(self, field) -> DiagonalForm:
        """Concrete form with the +1 coefficients first."""
        return DiagonalForm(tuple([1] * self.plus + [-1] * self.minus), field)

    def __str__(self):
        return f"Q_{{{self.plus},{self.minus}}}"


def minus_form(n: int) -> SignatureForm:
    """``-(x_1^2 + ... + x_n^2)``."""
    return SignatureForm(0, n)


def plus_form(n: int) -> SignatureForm:
    """``x_1^2 + ... + x_n^2``."""
    return SignatureForm(n, 0)


HYPERBOLIC = SignatureForm(1, 1)


@dataclass(frozen=True)
class DiagonalForm:
    """``sum a_i x_i^2`` over a concrete field; every ``a_i`` nonzero."""

    coeffs: tuple
    field: Union[PrimeField, RationalField] = QQ

    def __post_init__(self):
        coeffs = tuple(self.field.coerce(a) for a in self.coeffs)
        for i, a in enumerate(coeffs):
            if self.field.is_zero(a):
                raise FieldError(f"degenerate form: coefficient {i} is zero")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    def perp(self, other: DiagonalForm) -> DiagonalForm:
        if other.field != self.field:
            raise FieldError("forms over different fields")
        return DiagonalForm(self.coeffs + other.coeffs, self.field)

    def __len__(self):
        return len(self.coeffs)


def _sign_of_permutation_count(rank: int) -> int:
    return -1 if (rank * (rank - 1) // 2) % 2 else 1


def det_form(q):
    """Product of the diagonal coefficients (a sign for signature forms)."""
    if isinstance(q, SignatureForm):
        return -1 if q.minus % 2 else 1
    field = q.field
    out = reduce(lambda a, b: a * b, q.coeffs, field.one)
    return field.coerce(out)


def ds_form(q):
    """Signed discriminant ``(-1)^(r(r-1)/2) det q``."""
    sign = _sign_of_permutation_count(q.rank)
    if isinstance(q, SignatureForm):
        return sign * det_form(q)
    return q.field.coerce(sign * det_form(q))


def perp_one(q: SignatureForm) -> SignatureForm:
    return SignatureForm(q.plus + 1, q.minus)


def hyperbolic_reduce(q: SignatureForm) -> tuple[SignatureForm, int]:
    """Split off hyperbolic planes: ``Q_{n,m} = core + h^count``."""
    n, m = q.plus, q.minus
    if n >= m:
        return SignatureForm(n - m, 0), m
    return SignatureForm(0, m - n), n


def scale_form(u, q):
    """The form ``u q``; for signature forms ``u`` must be +1 or -1."""
    if isinstance(q, SignatureForm):
        if u == 1:
            return q
        if u == -1:
            return SignatureForm(q.minus, q.plus)
        if u == 0:
            raise ZeroScalar("cannot scale a form by 0")
        raise ValueError("signature forms only scale by +1 or -1")
    u = q.field.coerce(u)
    if q.field.is_zero(u):
        raise ZeroScalar("cannot scale a form by 0")
    return DiagonalForm(tuple(u * a for a in q.coeffs), q.field)


def ds_is_square(profile: FieldProfile, q: SignatureForm) -> bool:
    """Whether ``sqrt(ds q)`` lies in a field of the given profile."""
    return ds_form(q) == 1 or profile is FieldProfile.SQRT_MINUS_ONE
