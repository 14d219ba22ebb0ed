"""Spinor coordinates, the null quadric, and its two rulings.
==========================================================

The complexified tangent space carries the null quadric of the metric; it is
swept out by a product of two projective lines, and the two line families on
it (the rulings) have conic Pluecker images supported on the self-dual and
anti-self-dual 3-planes of bivector space.
"""

import numpy as np

from branchcurve import (
    Basis,
    BivectorCoords,
    SpinorPoint,
    from_sd_basis,
    pluecker,
    qform_lambda2g,
    qform_v,
    segre,
    t_minus,
    t_plus,
    to_sd_basis,
)

np.set_printoptions(precision=4, suppress=True)

a = SpinorPoint(1.0, 0.5 - 0.25j)
b = SpinorPoint(0.2j, 1.0)

w = segre(a, b)
print("point on the quadric:", w.w)
print("sum of squares (should vanish):", np.sum(w.w**2))

# A line through two of its points, in wedge coordinates.
w2 = segre(a, SpinorPoint(1.0, 3.0))
line = pluecker(w.w, w2.w)
print("\nPluecker coordinates:", line.u)
print("decomposability value:", qform_v(line))

# Change of basis to self-dual coordinates and back is lossless.
sd = to_sd_basis(line)
print("\nself-dual coordinates:", sd.u)
print("round trip max error:", np.max(np.abs(from_sd_basis(sd).u - line.u)))

# The ruling through a fixed spinor point is supported on one 3-plane
# and sits on the conic there.
up = t_plus(a)
um = t_minus(b)
print("\nruling (+):", up.u)
print("ruling (-):", um.u)
print("conic residual (+):", np.sum(up.u[:3] ** 2))
print("conic residual (-):", np.sum(um.u[3:] ** 2))
print("the two rulings are orthogonal:", qform_lambda2g(up, um))

# The ruling conic is exactly the Pluecker image of the line family.
span1 = segre(a, SpinorPoint(1.0, 0.0))
span2 = segre(a, SpinorPoint(0.0, 1.0))
via_lines = pluecker(span1.w, span2.w)
direct = from_sd_basis(up)
i = int(np.argmax(np.abs(via_lines.u)))
print("\nprojective match of the two constructions:",
      np.max(np.abs(via_lines.u / via_lines.u[i] - direct.u / direct.u[i])))

# Wedge-basis vectors are unit length for the induced metric.
e12 = BivectorCoords([1, 0, 0, 0, 0, 0], Basis.WEDGE)
print("\n|e1^e2|^2 under the induced metric:", qform_lambda2g(e12, e12))
