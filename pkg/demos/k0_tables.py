"""
Reduced K_0 of the rings R_{n,m}
================================

The answer depends only on n - m and on how -1 behaves in the ground field.
"""

from quadric_k0 import FieldProfile, abs_group, render_table

profiles = list(FieldProfile)

# rows: n - m from -8 to 8
for diff in range(-8, 9):
    n, m = (diff, 0) if diff > 0 else (0, -diff)
    if n + m == 0:
        continue
    row = [str(abs_group(pr, n + 3, m + 3).k0) for pr in profiles]
    print(f"{diff:+3d}", *(f"{c:>4}" for c in row))

# the real case, tabulated with s = 16^r
print(render_table(FieldProfile.QUATERNION_DIVISION, "paper-8r", r=1))

res = abs_group(FieldProfile.QUATERNION_DIVISION, 0, 5)
print(res.label, res.perp_label, res.d, res.dperp, res.k0)
