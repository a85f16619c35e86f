#!/usr/bin/env python3
"""Height descent: drive any point down to its last vertices.

The height |x1|+|x2|+|x3| never increases along a descent; a last
vertex admits no strictly decreasing move.  Descent witnesses replay,
and coordinates that grew doubly exponentially come back down in a
handful of exact-integer steps.
"""

import random
import time

from markoff_orbits import (
    apply_vieta,
    apply_word,
    derive_params,
    descend,
    descending_directions,
    is_last_vertex,
    make_point,
    torus_params,
)

markoff = torus_params(0)
p = make_point(markoff, (-3, 6, 15))
print("descending", p, "on the Markoff surface:")
result = descend(markoff, p)
for vertex, witness in result.last_vertices:
    print("  last vertex", vertex, "via word", witness)
    print("  replay check:", apply_word(markoff, p, witness))

print("\nnon-increasing directions out of (-3,6,15):")
for step in descending_directions(markoff, p):
    print("  move", step.move, "height change", step.change,
          "(strict)" if step.strict else "(level)")

print("\n(-3,3,3) is a last vertex:", is_last_vertex(markoff, make_point(markoff, (-3, 3, 3))))

# Big-integer stress: push a point with an infinite orbit sky high and
# bring it back.
params = derive_params((1, 1, 1, 1))
seed = make_point(params, (-14, 3, 6))
rng = random.Random(7)
point = seed
word = []
for _ in range(25):
    ascending = [
        (i, image)
        for i in (1, 2, 3)
        for image in (apply_vieta(params, point, i),)
        if image.height() > point.height()
    ]
    i, point = rng.choice(ascending)
    word.append(i)
bits = max(abs(c) for c in point.coords).bit_length()
print(f"\nafter 25 ascending moves from {seed}: ~{bits} bit coordinates")
t0 = time.perf_counter()
result = descend(params, point)
elapsed = time.perf_counter() - t0
for vertex, witness in result.last_vertices:
    print(f"descend returns {vertex} (witness length {len(witness)}) "
          f"in {elapsed:.3f}s")
