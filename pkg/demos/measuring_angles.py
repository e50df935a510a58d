"""Measure angles given only by rational points.

An angle is stored as an exact rational invariant.  Its measure is an
enclosure in half-turns, degrees or radians, refined to any width.
"""

from fractions import Fraction

from euclidkit import Point, angle_from_points, from_halfturn_fraction, theta

W = Fraction(1, 10**12)

# the acute angle of the 3-4-5 right triangle
apex, b, c = Point(0, 0), Point(3, 0), Point(3, 4)
alpha = angle_from_points(apex, b, c)
print("invariant sign(cos)*cos^2 =", alpha.inv, " rational sine:", alpha.rational_sin)
m = theta(alpha, W / 8)
print("half-turns:", m.halfturns())
print("radians   :", [float(x) for x in (m.radians(W).lo, m.radians(W).hi)])

# a right angle comes out exact in half-turns and degrees
right = angle_from_points(Point(0, 0), Point(1, 0), Point(0, 5))
print("right angle:", theta(right).halfturns(), "half-turn,", theta(right).degrees(), "degrees")

# one degree is not a rational-point angle, but it has a measure all the same
deg = theta(from_halfturn_fraction(Fraction(1, 180)), W)
r = deg.radians()
print("one degree in radians:", float(r.lo), "..", float(r.hi))
