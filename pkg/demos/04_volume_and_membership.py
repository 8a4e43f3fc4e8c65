"""Oriented volume of a parallelepiped, and membership in a subspace.

|Gdet| of n generators in R^m is the n-dimensional volume they span. The sign
is the orientation of their projection onto the coordinate plane picked out by
the principal rows.
"""
import numpy as np

import gdet

v = gdet.generalized_volume([(3, 4, 2), (6, 8, 1)])
print("area:", v.volume, " orientation:", v.orientation, " projection plane rows:", v.principal)
# rows (1, 3) are the x and z coordinates: the parallelogram's shadow on the
# xz-plane is negatively oriented.

# Rotating the generators inside their span leaves the volume alone.
A = np.column_stack([(3, 4, 2), (6, 8, 1)]).astype(float)
t = 0.3
rotation = np.array([[np.cos(t), -np.sin(t)], [np.sin(t), np.cos(t)]])
print("after rotation:", gdet.generalized_volume(list((A @ rotation).T)).volume)

# Gdet(basis, x) = 0 exactly when x lies in the span of the basis.
plane = [(1.0, 0.0, 1.0), (0.0, 1.0, 1.0)]
print("\n(2,3,5) in plane:", gdet.in_subspace(plane, (2.0, 3.0, 5.0)))
print("(2,3,4) in plane:", gdet.in_subspace(plane, (2.0, 3.0, 4.0)))

# Shifted: the horizontal line through (0, 1).
print("(7,1) on line:", gdet.in_variety([(1.0, 0.0)], (0.0, 1.0), (7.0, 1.0)))
print("(7,2) on line:", gdet.in_variety([(1.0, 0.0)], (0.0, 1.0), (7.0, 2.0)))
