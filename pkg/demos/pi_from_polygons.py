"""Squeeze pi between inscribed and circumscribed regular polygons.

Starting from the hexagon, every doubling of the side count tightens both
bounds.  Four doublings give the 96-gon, whose bounds already sit inside
3 10/71 < pi < 3 1/7.
"""

from fractions import Fraction

from euclidkit import pi_enclosure
from euclidkit.exact import format_decimal

for k in range(0, 21, 2):
    p = pi_enclosure(k)
    b = p.bounds
    print(f"{p.sides:>8} sides  {format_decimal(b.lo, 14, 'down')} .. {format_decimal(b.hi, 14, 'up')}"
          f"  width {float(b.width):.2e}")

p96 = pi_enclosure(4).bounds
print()
print("96-gon inside the classical bracket:", 3 + Fraction(10, 71) < p96.lo and p96.hi < 3 + Fraction(1, 7))
