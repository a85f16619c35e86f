#!/usr/bin/env python3
"""Capped orbit graphs, the brute-force oracle, and the command line.

Orbit graphs truncate the closure at a height cap and label edges with
their generating move; the oracle is an independent capped search used
to cross-validate the decision procedure on small instances.
"""

import subprocess
import sys

from markoff_orbits import (
    bfs_orbit,
    derive_params,
    make_point,
    oracle_equivalent,
    orbit_graph,
    torus_params,
)

ones = derive_params((1, 1, 1, 1))
graph = orbit_graph(ones, make_point(ones, (0, 1, 2)), 3)
print("orbit graph of (0,1,2) at cap 3:")
for v in graph.vertices:
    print("  vertex", v, "height", v.height())
for e in graph.edges:
    print("  edge", e.src, "--", e.dst, "move", e.move)
print("truncated:", graph.truncated)

markoff = torus_params(0)
start = make_point(markoff, (-3, 3, 3))
closure = bfs_orbit(markoff, start, 24)
print(f"\ncapped Markoff closure from {start}: {len(closure)} points")

verdict = oracle_equivalent(markoff, start, make_point(markoff, (-3, 6, 15)), 30)
print("oracle verdict:", verdict.state, "word", verdict.word)

print("\nthe same through the command line:")
for argv in (
    ["params", "--k", "1,1,1,1"],
    ["decide", "--k", "1,1,1,1", "--x", "0,1,2", "--y", "2,1,0", "--mode", "mcg"],
    ["orbit-graph", "--k", "1,1,1,1", "--point", "0,1,2", "--cap", "3",
     "--format", "dot"],
):
    print("$ markoff-orbits", " ".join(argv))
    out = subprocess.run(
        [sys.executable, "-m", "markoff_orbits.cli", *argv],
        capture_output=True,
        text=True,
    )
    print(out.stdout)
