"""The two exceptional vertex classes and their component structure.

The *core* set collects the integral points with a coordinate in
{0, +-1} or with a cross product |x_j*x_l| below max(3|alpha_i|, 4) for
some labeling (i, j, l); it is always finite and is enumerated exactly
here.  The *junction* set collects the points outside the core with
some |x_i| = 2 whose two complementary moves both fail to increase the
height; junction points are the only channel connecting otherwise
separated descent trees, so they drive the equivalence decision.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Dict, FrozenSet, Tuple

from .descent import Moveset
from .surface import (
    SurfaceParams,
    SurfacePoint,
    _check_same_surface,
    _trusted_point,
    _vieta_coords,
    residual,
)

__all__ = [
    "INDEX_TRIPLES",
    "ExceptionalCatalog",
    "core_components",
    "enumerate_core",
    "enumerate_core_mcg",
    "is_in_core",
    "is_in_junction",
    "is_in_junction_mcg",
]

# The six labelings (i, j, l) of the coordinate positions.
INDEX_TRIPLES = (
    (1, 2, 3),
    (1, 3, 2),
    (2, 1, 3),
    (2, 3, 1),
    (3, 1, 2),
    (3, 2, 1),
)


def _core_coords(alpha, coords) -> bool:
    x = coords
    for i, j, l in INDEX_TRIPLES:
        if abs(x[i - 1]) <= 1:
            return True
        if abs(x[j - 1] * x[l - 1]) <= max(3 * abs(alpha[i - 1]), 4):
            return True
    return False


def is_in_core(params: SurfaceParams, p: SurfacePoint) -> bool:
    """Membership in the finite core set."""
    _check_same_surface(params, p)
    return _core_coords(params.alpha, p.coords)


def _floor_div(a: int, b: int) -> int:
    return a // b


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _place(i: int, v, j: int, t, l: int, u3) -> tuple:
    out = [0, 0, 0]
    out[i - 1] = v
    out[j - 1] = t
    out[l - 1] = u3
    return tuple(out)


def _enumerate_core_coords(params: SurfaceParams) -> Tuple[tuple, ...]:
    alpha = params.alpha
    beta = params.beta
    found = set()

    # Coordinate clause: fix slot i at v in {-1, 0, 1}.  The slice is a
    # conic x_j^2 + x_l^2 + v*x_j*x_l - a_j*x_j - a_l*x_l + c = 0 with
    # c = v^2 - a_i*v - beta.  For fixed x_j = t this is a quadratic in
    # x_l whose discriminant D(t) has negative leading coefficient
    # v^2 - 4, so D >= 0 only on a bounded interval of t.
    for i in (1, 2, 3):
        j, l = [c for c in (1, 2, 3) if c != i]
        ai, aj, al = alpha[i - 1], alpha[j - 1], alpha[l - 1]
        for v in (-1, 0, 1):
            c = v * v - ai * v - beta
            qa = v * v - 4
            qb = 4 * aj - 2 * v * al
            qc = al * al - 4 * c
            disc2 = qb * qb - 4 * qa * qc
            if disc2 < 0:
                continue
            s_hi = isqrt(disc2) + 1
            denom = 2 * qa
            t_lo = _floor_div(-qb + s_hi, denom)
            t_hi = _ceil_div(-qb - s_hi, denom)
            for t in range(t_lo, t_hi + 1):
                d = qa * t * t + qb * t + qc
                if d < 0:
                    continue
                sd = isqrt(d)
                if sd * sd != d:
                    continue
                for root in {(al - v * t + sd), (al - v * t - sd)}:
                    if root % 2 == 0:
                        found.add(_place(i, v, j, t, l, root // 2))

    # Product clause: both remaining coordinates at absolute value >= 2
    # with a bounded cross product (smaller values are already covered
    # by the coordinate clause); solve the quadratic in slot i exactly.
    for i in (1, 2, 3):
        j, l = [c for c in (1, 2, 3) if c != i]
        ai, aj, al = alpha[i - 1], alpha[j - 1], alpha[l - 1]
        bound = max(3 * abs(ai), 4)
        a = 2
        while 2 * a <= bound:
            b = 2
            while a * b <= bound:
                for xj in (a, -a):
                    for xl in (b, -b):
                        prod = xj * xl
                        qb = prod - ai
                        qc = xj * xj + xl * xl - aj * xj - al * xl - beta
                        d = qb * qb - 4 * qc
                        if d < 0:
                            continue
                        sd = isqrt(d)
                        if sd * sd != d:
                            continue
                        for num in {(-qb + sd), (-qb - sd)}:
                            if num % 2 == 0:
                                found.add(_place(i, num // 2, j, xj, l, xl))
                b += 1
            a += 1

    for coords in found:
        assert residual(params, coords) == 0
    return tuple(sorted(found))


_CORE_CACHE: Dict[SurfaceParams, Tuple[tuple, ...]] = {}
_CORE_MCG_CACHE: Dict[SurfaceParams, Tuple[tuple, ...]] = {}


def _core_coord_set(params: SurfaceParams) -> Tuple[tuple, ...]:
    cached = _CORE_CACHE.get(params)
    if cached is None:
        cached = _enumerate_core_coords(params)
        _CORE_CACHE[params] = cached
    return cached


def enumerate_core(params: SurfaceParams) -> Tuple[SurfacePoint, ...]:
    """All core points, exactly, in canonical order.

    Both defining clauses bound the search: a coordinate in {0, +-1}
    confines the other two to a conic with finitely many integer points,
    and a bounded cross product leaves a quadratic in the last slot.
    """
    return tuple(_trusted_point(params, c) for c in _core_coord_set(params))


def _core_mcg_coord_set(params: SurfaceParams) -> Tuple[tuple, ...]:
    cached = _CORE_MCG_CACHE.get(params)
    if cached is not None:
        return cached
    alpha = params.alpha
    base = _core_coord_set(params)
    out = set(base)
    for coords in base:
        for i in (1, 2, 3):
            first = _vieta_coords(alpha, coords, i)
            out.add(first)
            for j in (1, 2, 3):
                out.add(_vieta_coords(alpha, first, j))
    cached = tuple(sorted(out))
    _CORE_MCG_CACHE[params] = cached
    return cached


def enumerate_core_mcg(params: SurfaceParams) -> Tuple[SurfacePoint, ...]:
    """Images of the core under all move words of length at most two.

    This is the exceptional set adapted to the mapping class group; it
    contains the core (length-zero words arise from repeating a letter).
    """
    return tuple(_trusted_point(params, c) for c in _core_mcg_coord_set(params))


def _junction_coords(alpha, coords) -> bool:
    if _core_coords(alpha, coords):
        return False
    base = sum(abs(c) for c in coords)
    for i, j, l in INDEX_TRIPLES:
        if abs(coords[i - 1]) != 2:
            continue
        hj = sum(abs(c) for c in _vieta_coords(alpha, coords, j))
        if hj > base:
            continue
        hl = sum(abs(c) for c in _vieta_coords(alpha, coords, l))
        if hl <= base:
            return True
    return False


def is_in_junction(params: SurfaceParams, p: SurfacePoint) -> bool:
    """Membership in the junction set.

    True when p is outside the core, some coordinate has absolute value
    2, and the two moves in the complementary coordinates both map p no
    higher than itself.  All six labelings are checked.
    """
    _check_same_surface(params, p)
    return _junction_coords(params.alpha, p.coords)


def is_in_junction_mcg(params: SurfaceParams, p: SurfacePoint) -> bool:
    """True when some word of length at most two maps p into the junction set.

    By involutivity this is exactly membership in the set of length <= 2
    images of junction points.
    """
    _check_same_surface(params, p)
    alpha = params.alpha
    if _junction_coords(alpha, p.coords):
        return True
    for i in (1, 2, 3):
        first = _vieta_coords(alpha, p.coords, i)
        if _junction_coords(alpha, first):
            return True
        for j in (1, 2, 3):
            if j != i and _junction_coords(alpha, _vieta_coords(alpha, first, j)):
                return True
    return False


@dataclass(frozen=True)
class ExceptionalCatalog:
    """A finite exceptional set split into move-connected components.

    Edges join two members exactly when a single move of the given
    moveset carries one to the other with both endpoints inside the set.
    """

    points: Tuple[SurfacePoint, ...]
    components: Tuple[Tuple[SurfacePoint, ...], ...]
    moveset: Moveset

    def component_index(self) -> Dict[tuple, int]:
        index = {}
        for n, comp in enumerate(self.components):
            for p in comp:
                index[p.coords] = n
        return index


_COMPONENT_CACHE: Dict[tuple, ExceptionalCatalog] = {}


def core_components(
    params: SurfaceParams, moveset: Moveset = Moveset.VIETA
) -> ExceptionalCatalog:
    """Partition the core (or its mapping class group variant) into
    components connected by moves staying inside the set."""
    key = (params, moveset)
    cached = _COMPONENT_CACHE.get(key)
    if cached is not None:
        return cached

    if moveset is Moveset.VIETA:
        coord_set = _core_coord_set(params)
    else:
        coord_set = _core_mcg_coord_set(params)
    members: FrozenSet[tuple] = frozenset(coord_set)
    moves = moveset.moves()
    alpha = params.alpha

    parent = {c: c for c in coord_set}

    def find(c):
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for coords in coord_set:
        for move in moves:
            image = coords
            for i in move:
                image = _vieta_coords(alpha, image, i)
            if image in members:
                union(coords, image)

    groups: Dict[tuple, list] = {}
    for coords in coord_set:
        groups.setdefault(find(coords), []).append(coords)
    components = tuple(
        tuple(_trusted_point(params, c) for c in sorted(group))
        for _, group in sorted(groups.items())
    )
    catalog = ExceptionalCatalog(
        points=tuple(_trusted_point(params, c) for c in coord_set),
        components=components,
        moveset=moveset,
    )
    _COMPONENT_CACHE[key] = catalog
    return catalog
