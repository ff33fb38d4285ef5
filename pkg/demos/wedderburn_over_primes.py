"""
Splitting Clifford algebras over small prime fields
===================================================

``classify`` finds the center and splits it with idempotents where possible.
Modulo 5 the element -1 is a square. Modulo 7 it is not, so the
two-dimensional center of C(x^2+y^2+z^2) stays a field.
"""

from quadric_k0 import PrimeField, classify
from quadric_k0.clifford import clifford_of_signature as build

for p in (5, 7):
    report = classify(build(3, 0, PrimeField(p)))
    print(p, report.factors)

# a sweep over signatures of rank 4
for plus in range(5):
    report = classify(build(plus, 4 - plus, PrimeField(7)))
    print(f"Q_{{{plus},{4 - plus}}}", [(f.matrix_size, f.center_degree) for f in report.factors])

# the same thing via the symbolic side, with the comparison spelled out
from quadric_k0.verify import verify_case

print(verify_case(2, 3, 13).render())
