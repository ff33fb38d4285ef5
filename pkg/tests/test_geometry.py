import pytest

from quadric_k0.errors import EmptyForm, LowDimension
from quadric_k0.geometry import RealCase, real_geometry
from quadric_k0.labels import K0Class


@pytest.mark.parametrize("plus, minus, case, euler, chow", [
    (3, 0, RealCase.SPHERE, K0Class.Z, K0Class.Z_MOD_2),
    (0, 4, RealCase.NO_REAL_POINTS, K0Class.ZERO, K0Class.ZERO),
    (2, 2, RealCase.INDEFINITE, K0Class.ZERO, K0Class.ZERO),
    (0, 1, RealCase.NO_REAL_POINTS, K0Class.ZERO, K0Class.ZERO),
])
def test_examples(plus, minus, case, euler, chow):
    rep = real_geometry(plus, minus)
    assert (rep.case_tag, rep.euler_class_group, rep.chow_group) == (case, euler, chow)


def test_render():
    assert real_geometry(3, 0).render() == (
        "GEOMETRY plus=3 minus=0 case=SPHERE euler=Z chow=Z/2 source=paper-s4")


@pytest.mark.parametrize("plus, minus", [(1, 0), (2, 0), (1, 1)])
def test_low_dimension_guard(plus, minus):
    with pytest.raises(LowDimension):
        real_geometry(plus, minus)


def test_invalid():
    with pytest.raises(EmptyForm):
        real_geometry(0, 0)
    with pytest.raises(ValueError):
        real_geometry(-1, 3)
