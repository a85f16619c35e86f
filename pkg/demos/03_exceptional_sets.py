#!/usr/bin/env python3
"""The two finite exceptional vertex classes.

The core set (a coordinate in {0, +-1}, or a small cross product) is
finite and enumerated exactly.  Junction points sit outside the core
with one coordinate of absolute value 2 and both complementary moves
non-increasing; they are the only channel between otherwise separated
descent trees, which is what makes equivalence decidable.
"""

from markoff_orbits import (
    Moveset,
    SurfaceParams,
    apply_vieta,
    core_components,
    derive_params,
    enumerate_core,
    enumerate_core_mcg,
    height,
    is_in_core,
    is_in_junction,
    make_point,
    torus_params,
)

params = derive_params((1, 1, 1, 1))
core = enumerate_core(params)
print(f"core of the trace-(1,1,1,1) surface: {len(core)} points")
print(" ", ", ".join(str(p) for p in core[:10]), "...")

catalog = core_components(params, Moveset.VIETA)
print(f"split into {len(catalog.components)} move-connected components;")
print("the worked-example component:",
      [str(p) for p in catalog.components[catalog.component_index()[(0, 1, 2)]]])

print("\nMarkoff surface core:", [str(p) for p in enumerate_core(torus_params(0))])
print("(every involution fixes the origin, so the extended core is the same:",
      [str(p) for p in enumerate_core_mcg(torus_params(0))], ")")

showcase = SurfaceParams(alpha=(0, 6, -6), beta=124)
u = make_point(showcase, (2, -10, 10))
print(f"\njunction showcase on alpha={showcase.alpha}, beta={showcase.beta}:")
print(f"  {u}: in core? {is_in_core(showcase, u)}; "
      f"junction? {is_in_junction(showcase, u)}")
for i in (2, 3):
    image = apply_vieta(showcase, u, i)
    print(f"  move {i} -> {image}, height {height(u)} -> {height(image)}")

double = torus_params(4)
q = make_point(double, (2, 3, -3))
print(f"\ndouble-line junction point {q} (alpha=0, beta=4):")
print("  moves 2 and 3 fix it:", apply_vieta(double, q, 2), apply_vieta(double, q, 3))
print("  move 1 climbs away:", apply_vieta(double, q, 1))
