"""Field profiles and exact arithmetic over F_p and Q.

Symbolic computations only need to know which of three hypotheses the
ground field satisfies (:class:`FieldProfile`).  The brute-force engine
needs actual arithmetic, which is provided for odd prime fields and for
the rationals.

Engine code works with raw scalars for speed: Python ``int`` in ``[0, p)``
for :class:`PrimeField`, ``int`` or :class:`fractions.Fraction` for
:class:`RationalField`.  :class:`Residue` is the typed wrapper for
interactive use.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DivisionByZero, FieldError, NotASquare

PRIME_CAP = 1 << 16


class FieldProfile(enum.Enum):
    """Which level hypothesis holds for a field of characteristic != 2."""

    SQRT_MINUS_ONE = "level-1"
    SUM_TWO_SQUARES = "level-2"
    QUATERNION_DIVISION = "level-inf"

    @property
    def descriptor(self) -> str:
        return self.value


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field F_p for an odd prime ``p < 2**16``."""

    p: int

    def __post_init__(self):
        p = self.p
        if not isinstance(p, (int, np.integer)) or isinstance(p, bool):
            raise FieldError(f"modulus must be an integer, got {p!r}")
        if p == 2:
            raise FieldError("characteristic 2 is not supported")
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if p >= PRIME_CAP:
            raise FieldError(f"{p} exceeds the modulus cap 2**16")
        object.__setattr__(self, "p", int(p))

    # -- engine scalar interface -------------------------------------------
    dtype = np.int64
    zero = 0
    one = 1

    def coerce(self, x) -> int:
        if isinstance(x, Residue):
            if x.field != self:
                raise FieldError(f"residue mod {x.field.p} used in F_{self.p}")
            return x.value
        if isinstance(x, Fraction):
            return self.coerce(x.numerator) * self.inv(self.coerce(x.denominator)) % self.p
        return int(x) % self.p

    def reduce(self, arr):
        return np.mod(arr, self.p)

    def inv(self, x) -> int:
        x = int(x) % self.p
        if x == 0:
            raise DivisionByZero(f"0 has no inverse mod {self.p}")
        return pow(x, -1, self.p)

    def neg(self, x) -> int:
        return (-int(x)) % self.p

    def is_zero(self, x) -> bool:
        return int(x) % self.p == 0

    def zeros(self, shape):
        return np.zeros(shape, dtype=np.int64)

    def array(self, values):
        return np.mod(np.asarray(values, dtype=np.int64), self.p)

    # -- typed helpers ------------------------------------------------------
    def __call__(self, value) -> Residue:
        return Residue(self.coerce(value), self)

    @property
    def profile(self) -> FieldProfile:
        return profile_of_prime(self.p)

    @property
    def descriptor(self) -> str:
        return f"Fp:{self.p}"

    def __str__(self):
        return f"F_{self.p}"


@dataclass(frozen=True)
class RationalField:
    """The field Q with exact scalars.

    Integral values are kept as plain ``int`` (much faster), everything
    else as :class:`fractions.Fraction`.
    """

    dtype = object
    zero = 0
    one = 1

    def coerce(self, x):
        if type(x) is int:
            return x
        if isinstance(x, Residue):
            raise FieldError("a residue cannot be coerced into Q")
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else x

    def reduce(self, arr):
        return arr

    def inv(self, x):
        if x == 0:
            raise DivisionByZero("division by zero in Q")
        return self.coerce(1 / Fraction(x))

    def neg(self, x):
        return self.coerce(-x)

    def is_zero(self, x) -> bool:
        return x == 0

    def zeros(self, shape):
        out = np.empty(shape, dtype=object)
        out.fill(0)
        return out

    def array(self, values):
        arr = np.array(values, dtype=object)
        flat = arr.reshape(-1)
        for i, v in enumerate(flat):
            flat[i] = self.coerce(v)
        return arr

    @property
    def profile(self) -> FieldProfile:
        return FieldProfile.QUATERNION_DIVISION

    @property
    def descriptor(self) -> str:
        return "Q"

    def __str__(self):
        return "Q"


QQ = RationalField()


@dataclass(frozen=True)
class Residue:
    """An element of F_p."""

    value: int
    field: PrimeField

    def __post_init__(self):
        if not 0 <= self.value < self.field.p:
            raise FieldError(f"residue {self.value} out of range for F_{self.field.p}")

    def _other(self, other) -> int:
        if isinstance(other, Residue):
            if other.field != self.field:
                raise FieldError("residues from different fields")
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other) % self.field.p
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Residue((self.value + o) % self.field.p, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Residue((self.value - o) % self.field.p, self.field)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Residue(self.value * o % self.field.p, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue((-self.value) % self.field.p, self.field)

    def inverse(self) -> Residue:
        return Residue(self.field.inv(self.value), self.field)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return Residue(self.value * self.field.inv(o) % self.field.p, self.field)

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Residue(pow(self.value, e, self.field.p), self.field)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, np.integer)):
            return self.value == int(other) % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Residue({self.value} mod {self.field.p})"


def profile_of_prime(p) -> FieldProfile:
    """Level profile of F_p: level 1 when p = 1 mod 4, level 2 otherwise.

    Finite fields never carry a quaternion division algebra, so
    ``QUATERNION_DIVISION`` is never returned.
    """
    if isinstance(p, PrimeField):
        p = p.p
    else:
        p = PrimeField(p).p
    return FieldProfile.SQRT_MINUS_ONE if p % 4 == 1 else FieldProfile.SUM_TWO_SQUARES


def is_square(a: Residue) -> bool:
    """Euler's criterion; 0 counts as a square."""
    p = a.field.p
    if a.value == 0:
        return True
    return pow(a.value, (p - 1) // 2, p) == 1


def sqrt_mod_p(a: Residue) -> Residue:
    """Smaller of the two square roots of ``a``."""
    if not is_square(a):
        raise NotASquare(f"{a.value} is not a square mod {a.field.p}")
    p = a.field.p
    for r in range((p - 1) // 2 + 1):
        if r * r % p == a.value:
            return Residue(r, a.field)
    raise AssertionError("Euler's criterion and search disagree")  # pragma: no cover


def parse_field(desc: str):
    """Resolve a field descriptor to ``(profile, concrete_field_or_None)``.

    Grammar: ``level-1 | level-2 | level-inf | Fp:<p> | Q``.
    """
    desc = desc.strip()
    for profile in FieldProfile:
        if desc == profile.value:
            return profile, None
    if desc == "Q":
        return FieldProfile.QUATERNION_DIVISION, QQ
    if desc.startswith("Fp:"):
        try:
            p = int(desc[3:])
        except ValueError:
            raise FieldError(f"bad prime in field descriptor {desc!r}") from None
        field = PrimeField(p)
        return field.profile, field
    raise FieldError(f"unknown field descriptor {desc!r}")
