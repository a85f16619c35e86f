#!/usr/bin/env python3
"""Deciding orbit equivalence, with certificates that replay.

Four flavors of outcome, all exact:
  * shared descent data settles most pairs immediately;
  * connections through the bounded junction region are found by tracing;
  * double-line junction points are provably isolated;
  * mapping class group verdicts add a parity analysis on top.
"""

from markoff_orbits import (
    SurfaceParams,
    apply_word,
    decide_gamma,
    decide_mcg,
    derive_params,
    make_point,
    torus_params,
)


def show(label, params, cert, x, y):
    print(f"{label}: {cert.verdict}", end="")
    if cert.equivalent:
        print(f", word {list(cert.word)}", end="")
        assert apply_word(params, x, cert.word).coords == y.coords
        print(" (replays)", end="")
    else:
        print(f" [{cert.reason.code}]", end="")
    print(f"  via stage '{cert.trace['stage']}'")


ones = derive_params((1, 1, 1, 1))
x = make_point(ones, (0, 1, 2))
show("worked example, full group", ones,
     decide_gamma(ones, x, make_point(ones, (2, 1, 0))), x, make_point(ones, (2, 1, 0)))
show("same pair, mapping class group", ones,
     decide_mcg(ones, x, make_point(ones, (2, 1, 0))), x, make_point(ones, (2, 1, 0)))
show("stabilized vertex, mapping class group", ones,
     decide_mcg(ones, x, make_point(ones, (0, 1, 0))), x, make_point(ones, (0, 1, 0)))

markoff = torus_params(0)
a = make_point(markoff, (-3, 3, 3))
b = make_point(markoff, (-3, 6, 15))
show("\nMarkoff pair, full group", markoff, decide_gamma(markoff, a, b), a, b)
c = make_point(markoff, (-6, 3, 3))
show("one odd move apart, full group", markoff, decide_gamma(markoff, a, c), a, c)
show("one odd move apart, mapping class group", markoff, decide_mcg(markoff, a, c), a, c)

double = torus_params(4)
u1 = make_point(double, (2, 3, -3))
u2 = make_point(double, (2, 4, -4))
show("\ndistinct double-line points", double, decide_gamma(double, u1, u2), u1, u2)

showcase = SurfaceParams(alpha=(0, 6, -6), beta=124)
p = make_point(showcase, (2, -4, 10))
q = make_point(showcase, (2, 8, 4))
cert = decide_gamma(showcase, p, q)
show("\nthrough the junction region", showcase, cert, p, q)
print("junction points met on the way:", cert.trace["junctions_x"])

fixed = torus_params(-11)
z = make_point(fixed, (-6, 3, 4))
w = apply_word(fixed, z, (2,))
show("\nodd connection rescued by a fixed point", fixed,
     decide_mcg(fixed, z, w), z, w)
