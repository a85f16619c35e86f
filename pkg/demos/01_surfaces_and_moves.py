#!/usr/bin/env python3
"""Surfaces, points, and the three involution moves.

A surface is fixed by four integers: coefficients alpha = (a1, a2, a3)
and beta.  They can be written down directly or derived from four
boundary traces.  Points are validated integral solutions, and each
move replaces one coordinate by the other root of the equation read as
a quadratic in that coordinate.
"""

from markoff_orbits import (
    NotOnSurface,
    apply_vieta,
    apply_word,
    derive_params,
    height,
    make_point,
    residual,
    torus_params,
)

params = derive_params((1, 1, 1, 1))
print("traces (1,1,1,1) give alpha =", params.alpha, "beta =", params.beta)

p = make_point(params, (0, 1, 2))
print("\n(0,1,2) is on the surface; height =", height(p))

print("\nresidual of (1,0,1):", residual(params, (1, 0, 1)))
try:
    make_point(params, (1, 0, 1))
except NotOnSurface as err:
    print("make_point rejects it:", err)

print("\nwalking the orbit of (0,1,2):")
q = apply_vieta(params, p, 3)
print("  move 3:", p, "->", q)
r = apply_vieta(params, q, 1)
print("  move 1:", q, "->", r)
print("  the word (3, 1) in one call:", apply_word(params, p, (3, 1)))
print("  move 3 twice returns home:", apply_vieta(params, q, 3))

print("\nmoves 1 and 2 fix (0,1,2):")
for i in (1, 2):
    print(f"  move {i}:", apply_vieta(params, p, i))
print("so its whole orbit is just {(0,1,2), (0,1,0), (2,1,0)}")

markoff = torus_params(0)
print("\ntorus mode: alpha =", markoff.alpha, "beta =", markoff.beta)
print("under the flip (x,y,z) = (-x1,x2,x3) this is x^2+y^2+z^2 = xyz;")
s = make_point(markoff, (-3, 3, 3))
print("(-3,3,3) corresponds to the classical triple (3,3,3)")
print("word (2,3):", s, "->", apply_word(markoff, s, (2, 3)))
