"""
Explicit isomorphisms behind the tables
=======================================

A witness is a map on generators. It is extended multiplicatively, checked on
every pair of basis elements and tested for full rank.
"""

from quadric_k0 import QQ, PrimeField, verify_witness_iso

print(verify_witness_iso("HxH").render())
print(verify_witness_iso("HxC").render())

for n in range(4):
    print(verify_witness_iso("ABS_MINUS", QQ, n=n).render())

cert = verify_witness_iso("SCALED", PrimeField(11), b=(1, -1), q=(2, 3))
print(cert.render())
print(cert.matrix[:4, :4])
