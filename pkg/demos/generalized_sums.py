"""Add angles past a straight angle.

Sums of rational-circle angles are exact rotations.  When the sum passes a
half-turn the excess is carried as a whole half-turn plus a proper residual.
"""

from fractions import Fraction

from euclidkit import Point, add_general, angle_from_points, theta

o, east = Point(0, 0), Point(1, 0)
a = angle_from_points(o, east, Point(-3, 4))  # obtuse, cos = -3/5
b = angle_from_points(o, east, Point(5, 12))  # acute, cos = 5/13

total = add_general(a, b)
print("a + b =", total)
print("residual cos, sin:", total.residual.rational_cos, total.residual.rational_sin)
deg = theta(total, Fraction(1, 10**12)).degrees()
print(f"a + b in degrees: {float(deg.lo):.10f} .. {float(deg.hi):.10f}")

# supplementary angles meet in exactly one half-turn
print("a + its supplement =", add_general(a, angle_from_points(o, east, Point(3, 4))))

# without a rational sine the residual is only enclosed, but the carry stays exact
c = angle_from_points(o, east, Point(1, 1))   # 45 degrees
d = angle_from_points(o, east, Point(-1, 2))
print("c + d =", add_general(c, d))
