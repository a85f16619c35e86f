"""Shared fixtures: the parameter suite and an independent brute-force scanner."""

import pytest

from markoff_orbits import SurfaceParams, derive_params, torus_params

# At least twenty parameter sets with |alpha_i| <= 8 and |beta| <= 130,
# mixing trace-derived surfaces, torus-mode surfaces, degenerate slices
# (double lines, parallel lines) and the junction showcase set.
PARAM_SUITE = (
    derive_params((1, 1, 1, 1)),          # alpha (2,2,2), beta -1
    derive_params((0, 0, 0, 0)),          # alpha (0,0,0), beta 4: double lines
    torus_params(0),                      # Markoff surface
    torus_params(-2),
    torus_params(29),                     # parallel-line slices
    torus_params(-11),                    # carries an involution-fixed point
    SurfaceParams(alpha=(0, 6, -6), beta=124),   # junction showcase
    derive_params((2, 1, 1, 0)),          # alpha (2,1,2), beta -2
    SurfaceParams(alpha=(1, 2, 3), beta=5),
    derive_params((2, 2, 2, 2)),          # alpha (8,8,8), beta -28
    SurfaceParams(alpha=(0, 0, 1), beta=7),
    SurfaceParams(alpha=(-2, 3, 0), beta=11),
    SurfaceParams(alpha=(1, 1, 1), beta=1),
    SurfaceParams(alpha=(4, -4, 0), beta=20),
    SurfaceParams(alpha=(5, 0, 0), beta=-3),
    SurfaceParams(alpha=(3, 3, 3), beta=-7),
    SurfaceParams(alpha=(0, 2, 0), beta=100),
    SurfaceParams(alpha=(6, 1, -1), beta=13),
    SurfaceParams(alpha=(7, -5, 2), beta=-60),
    SurfaceParams(alpha=(2, 0, -8), beta=34),
    SurfaceParams(alpha=(1, -1, 1), beta=-1),
    SurfaceParams(alpha=(0, 4, 4), beta=0),      # another double-line slice
)

assert len(PARAM_SUITE) >= 20
assert all(max(abs(a) for a in p.alpha) <= 8 for p in PARAM_SUITE)
assert all(abs(p.beta) <= 130 for p in PARAM_SUITE)


def scan_solutions(params, height_cap):
    """Exhaustive coordinate search: all integral solutions with
    |x1|+|x2|+|x3| <= height_cap.  Deliberately plain so it stays
    independent of the library's enumeration logic."""
    a1, a2, a3 = params.alpha
    b = params.beta
    out = []
    for x1 in range(-height_cap, height_cap + 1):
        r1 = height_cap - abs(x1)
        for x2 in range(-r1, r1 + 1):
            r2 = r1 - abs(x2)
            s = x1 * x1 + x2 * x2 - a1 * x1 - a2 * x2 - b
            t = x1 * x2
            for x3 in range(-r2, r2 + 1):
                if s + x3 * x3 + t * x3 - a3 * x3 == 0:
                    out.append((x1, x2, x3))
    return out


@pytest.fixture(scope="session")
def param_suite():
    return PARAM_SUITE
