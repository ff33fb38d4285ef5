"""Reduced K_0 of the quadric rings k[x, y]/(x_1^2 + ... - y_1^2 - ... - 1).

The symbolic side (:mod:`quadric_k0.labels`) computes Clifford algebras of
``Q_{n,m}`` as labels over a field profile and reads off ``~K_0``.  The
brute-force side (:mod:`quadric_k0.clifford`, :mod:`quadric_k0.wedderburn`,
:mod:`quadric_k0.witnesses`) rebuilds the same algebras from structure
constants over F_p or Q and checks the labels independently.
"""

from .fields import QQ, FieldProfile, PrimeField, Residue, is_square, parse_field, profile_of_prime, sqrt_mod_p
from .forms import DiagonalForm, SignatureForm, det_form, ds_form, hyperbolic_reduce, perp_one, scale_form
from .labels import (
    AlgebraLabel,
    Base,
    K0Class,
    abs_group,
    base_clifford,
    clifford_of_signature,
    closed_form_k0,
    ds_square_test,
    normalize_label,
    simple_dim,
    tensor_labels,
)
from .geometry import RealGeometryReport, real_geometry
from .clifford import AlgebraTable, CliffordAlgebra, clifford, matrix_algebra, tensor_table
from .wedderburn import SimpleFactor, WedderburnReport, classify
from .witnesses import verify_witness_iso
from .tables import render_table

__version__ = "0.1.0"
