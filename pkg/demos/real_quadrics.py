"""
Real quadrics: Euler class and Chow groups
==========================================

This is a lookup of known answers, not a computation.
"""

from quadric_k0 import real_geometry
from quadric_k0.errors import LowDimension

for plus, minus in [(3, 0), (5, 0), (0, 4), (2, 2), (4, 1), (2, 0)]:
    try:
        print(real_geometry(plus, minus).render())
    except LowDimension as exc:
        print(plus, minus, exc)
