"""Height descent and orbit graphs.

Vertices are integral surface points ordered by the height
|x1|+|x2|+|x3|.  Descent repeatedly applies moves that do not increase
the height; a *last vertex* is a point from which no single move
strictly decreases it.  Two movesets are supported: the full group
generated by the three involutions, and the mapping class group acting
through the six proper two-letter compositions.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .surface import (
    MoveWord,
    SurfaceParams,
    SurfacePoint,
    _check_same_surface,
    _trusted_point,
    _vieta_coords,
)

__all__ = [
    "DescentResult",
    "Moveset",
    "OrbitEdge",
    "OrbitGraph",
    "ResourceCap",
    "descend",
    "descending_directions",
    "is_last_vertex",
    "orbit_graph",
]

DEFAULT_BUDGET = 10**6


class ResourceCap(RuntimeError):
    """Raised when a traversal exceeds its explored-vertex budget."""


class Moveset(enum.Enum):
    """Which generator set drives a traversal.

    VIETA: the three single involutions, move words of length one.
    MCG: the six proper compositions of two distinct involutions, move
    words of length two (even words generate the mapping class group).
    """

    VIETA = "gamma"
    MCG = "mcg"

    def moves(self) -> Tuple[MoveWord, ...]:
        if self is Moveset.VIETA:
            return ((1,), (2,), (3,))
        # Compositions enumerated by outer (last-applied) involution
        # first; the word lists the inner letter before the outer one.
        return ((2, 1), (3, 1), (1, 2), (3, 2), (1, 3), (2, 3))


def _height(coords) -> int:
    x1, x2, x3 = coords
    return abs(x1) + abs(x2) + abs(x3)


def _apply_raw(alpha, coords, word):
    for i in word:
        coords = _vieta_coords(alpha, coords, i)
    return coords


@dataclass(frozen=True)
class MoveStep:
    """One non-increasing direction out of a point."""

    move: MoveWord
    change: int
    strict: bool


def descending_directions(
    params: SurfaceParams, p: SurfacePoint, moveset: Moveset = Moveset.VIETA
) -> Tuple[MoveStep, ...]:
    """All moves whose image height does not exceed the height of p.

    Each entry carries the exact height change; strict decreases are
    flagged.  Moves that fix p appear with change 0.
    """
    _check_same_surface(params, p)
    base = _height(p.coords)
    steps = []
    for move in moveset.moves():
        image = _apply_raw(params.alpha, p.coords, move)
        change = _height(image) - base
        if change <= 0:
            steps.append(MoveStep(move=move, change=change, strict=change < 0))
    return tuple(steps)


def is_last_vertex(
    params: SurfaceParams, p: SurfacePoint, moveset: Moveset = Moveset.VIETA
) -> bool:
    """True when no move strictly decreases the height."""
    _check_same_surface(params, p)
    base = _height(p.coords)
    return all(
        _height(_apply_raw(params.alpha, p.coords, move)) >= base
        for move in moveset.moves()
    )


class _Descent:
    """Full weakly-decreasing closure of one start point.

    visited maps coordinates to the word that reaches them from the
    start; lasts lists the coordinates of every last vertex in the
    closure, in canonical (numeric tuple) order.
    """

    __slots__ = ("visited", "lasts", "explored")

    def __init__(self, visited: Dict[tuple, MoveWord], lasts: Tuple[tuple, ...]):
        self.visited = visited
        self.lasts = lasts
        self.explored = len(visited)


def _descend_raw(
    alpha, start, moves: Tuple[MoveWord, ...], budget: int
) -> _Descent:
    visited: Dict[tuple, MoveWord] = {start: ()}
    queue = deque((start,))
    lasts: List[tuple] = []
    while queue:
        coords = queue.popleft()
        base = _height(coords)
        found_strict = False
        for move in moves:
            image = _apply_raw(alpha, coords, move)
            h = _height(image)
            if h < base:
                found_strict = True
            if h <= base and image != coords and image not in visited:
                if len(visited) >= budget:
                    raise ResourceCap(
                        f"descent exceeded the budget of {budget} vertices"
                    )
                visited[image] = visited[coords] + move
                queue.append(image)
        if not found_strict:
            lasts.append(coords)
    return _Descent(visited, tuple(sorted(lasts)))


_DESCENT_CACHE: Dict[tuple, _Descent] = {}


def _descend_full(
    params: SurfaceParams,
    coords: tuple,
    moveset: Moveset,
    budget: int = DEFAULT_BUDGET,
) -> _Descent:
    key = (params, coords, moveset, budget)
    result = _DESCENT_CACHE.get(key)
    if result is None:
        result = _descend_raw(params.alpha, coords, moveset.moves(), budget)
        _DESCENT_CACHE[key] = result
    return result


@dataclass(frozen=True)
class DescentResult:
    """Last vertices reachable by weakly decreasing move sequences.

    Each last vertex comes with a witness word mapping the query point
    to it; the height is non-increasing at every prefix of the witness.
    """

    last_vertices: Tuple[Tuple[SurfacePoint, MoveWord], ...]
    explored: int


def descend(
    params: SurfaceParams,
    p: SurfacePoint,
    moveset: Moveset = Moveset.VIETA,
    budget: int = DEFAULT_BUDGET,
) -> DescentResult:
    """Exhaustive weakly-decreasing closure down to last vertices.

    Equal-height steps are explored (with a visited set), so plateau
    twins of a last vertex are always reported.  Deterministic: moves
    are tried in a fixed order and output is sorted canonically.
    """
    _check_same_surface(params, p)
    data = _descend_full(params, p.coords, moveset, budget)
    pairs = tuple(
        (_trusted_point(params, coords), data.visited[coords]) for coords in data.lasts
    )
    return DescentResult(last_vertices=pairs, explored=data.explored)


@dataclass(frozen=True)
class OrbitEdge:
    src: SurfacePoint
    dst: SurfacePoint
    move: MoveWord


@dataclass(frozen=True)
class OrbitGraph:
    """Orbit closure truncated at a height cap.

    Undirected edge set, deduplicated; moves that fix a vertex are not
    recorded as edges.  ``truncated`` is set when some move out of a
    kept vertex exceeded the cap.
    """

    vertices: Tuple[SurfacePoint, ...]
    edges: Tuple[OrbitEdge, ...]
    cap: int
    truncated: bool
    moveset: Moveset

    def heights(self) -> Dict[SurfacePoint, int]:
        return {v: v.height() for v in self.vertices}


def orbit_graph(
    params: SurfaceParams,
    p: SurfacePoint,
    height_cap: int,
    moveset: Moveset = Moveset.VIETA,
    budget: int = DEFAULT_BUDGET,
) -> OrbitGraph:
    """Breadth-first closure of p under moves staying at height <= cap."""
    _check_same_surface(params, p)
    if height_cap < _height(p.coords):
        raise ValueError("the height cap must be at least the height of the start")
    alpha = params.alpha
    moves = moveset.moves()
    visited = {p.coords}
    queue = deque((p.coords,))
    edges = set()
    truncated = False
    while queue:
        coords = queue.popleft()
        for move in moves:
            image = _apply_raw(alpha, coords, move)
            if image == coords:
                continue
            if _height(image) > height_cap:
                truncated = True
                continue
            # One undirected edge per generator; the move is recorded as
            # seen from the smaller endpoint, so re-discovery from the
            # other side (via the reversed move) lands on the same key.
            if coords < image:
                edges.add((coords, image, move))
            else:
                edges.add((image, coords, tuple(reversed(move))))
            if image not in visited:
                if len(visited) >= budget:
                    raise ResourceCap(
                        f"orbit graph exceeded the budget of {budget} vertices"
                    )
                visited.add(image)
                queue.append(image)
    vertex_list = tuple(_trusted_point(params, c) for c in sorted(visited))
    edge_list = tuple(
        OrbitEdge(
            src=_trusted_point(params, a),
            dst=_trusted_point(params, b),
            move=m,
        )
        for a, b, m in sorted(edges)
    )
    return OrbitGraph(
        vertices=vertex_list,
        edges=edge_list,
        cap=height_cap,
        truncated=truncated,
        moveset=moveset,
    )
