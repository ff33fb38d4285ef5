"""Euler class group and Chow group of zero cycles for real quadrics.

This is a lookup over known results for ``A = R[x, y]/(Q_{n,m} - 1)``,
not a computation from first principles.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import EmptyForm, LowDimension
from .labels import K0Class


class RealCase(enum.Enum):
    NO_REAL_POINTS = "NO_REAL_POINTS"
    SPHERE = "SPHERE"
    INDEFINITE = "INDEFINITE"


@dataclass(frozen=True)
class RealGeometryReport:
    plus: int
    minus: int
    case_tag: RealCase
    euler_class_group: K0Class
    chow_group: K0Class

    def render(self) -> str:
        return (f"GEOMETRY plus={self.plus} minus={self.minus} case={self.case_tag.value} "
                f"euler={self.euler_class_group} chow={self.chow_group} source=paper-s4")


def real_geometry(plus: int, minus: int) -> RealGeometryReport:
    """Classify ``R[x, y]/(Q_{plus,minus} - 1)``.

    * no positive variables: no real points, ``E = CH_0 = 0``;
    * positive definite (the sphere): ``E = Z``, ``CH_0 = Z/2``;
    * indefinite: no compact real component, ``E = CH_0 = 0``.

    The last two need Krull dimension at least 2, i.e. ``plus + minus >= 3``.
    """
    if plus < 0 or minus < 0:
        raise ValueError(f"negative signature ({plus}, {minus})")
    if plus + minus == 0:
        raise EmptyForm("R_{0,0} is the zero ring")
    if plus == 0:
        return RealGeometryReport(plus, minus, RealCase.NO_REAL_POINTS, K0Class.ZERO, K0Class.ZERO)
    if plus + minus < 3:
        raise LowDimension(f"LOW_DIMENSION: plus + minus = {plus + minus} < 3 is not covered")
    if minus == 0:
        return RealGeometryReport(plus, minus, RealCase.SPHERE, K0Class.Z, K0Class.Z_MOD_2)
    return RealGeometryReport(plus, minus, RealCase.INDEFINITE, K0Class.ZERO, K0Class.ZERO)
