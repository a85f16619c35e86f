"""Independent brute-force ground truth for small instances.

The oracle explores a height-capped orbit closure by plain breadth
first search and claims equivalence only with a replayable word.  The
cap bounds the height along the whole path, not just at the endpoints,
so the oracle under-approximates true equivalence: the right polarity
for validating a decision procedure, and the reason it never claims
non-equivalence.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, Optional

from .descent import DEFAULT_BUDGET, Moveset, ResourceCap
from .surface import (
    MoveWord,
    SurfaceParams,
    SurfacePoint,
    _check_same_surface,
    _trusted_point,
    _vieta_coords,
)

__all__ = ["OracleVerdict", "bfs_orbit", "oracle_equivalent"]


def _height(coords) -> int:
    return abs(coords[0]) + abs(coords[1]) + abs(coords[2])


_BFS_CACHE: Dict[tuple, Dict[tuple, MoveWord]] = {}


def _bfs_words(
    params: SurfaceParams,
    start: tuple,
    height_cap: int,
    moveset: Moveset,
    budget: int,
) -> Dict[tuple, MoveWord]:
    key = (params, start, height_cap, moveset, budget)
    cached = _BFS_CACHE.get(key)
    if cached is not None:
        return cached
    alpha = params.alpha
    moves = moveset.moves()
    words: Dict[tuple, MoveWord] = {start: ()}
    queue = deque((start,))
    while queue:
        coords = queue.popleft()
        for move in moves:
            image = coords
            for i in move:
                image = _vieta_coords(alpha, image, i)
            if image in words or _height(image) > height_cap:
                continue
            if len(words) >= budget:
                raise ResourceCap(
                    f"oracle search exceeded the budget of {budget} vertices"
                )
            words[image] = words[coords] + move
            queue.append(image)
    _BFS_CACHE[key] = words
    return words


def bfs_orbit(
    params: SurfaceParams,
    p: SurfacePoint,
    height_cap: int,
    moveset: Moveset = Moveset.VIETA,
    budget: int = DEFAULT_BUDGET,
) -> Dict[SurfacePoint, MoveWord]:
    """Every point reachable without ever exceeding the height cap.

    Returns a mapping from reached points to predecessor words, in
    deterministic first-discovery order.  Output grows monotonically
    with the cap.
    """
    _check_same_surface(params, p)
    if height_cap < p.height():
        raise ValueError("the height cap must be at least the height of the start")
    words = _bfs_words(params, p.coords, height_cap, moveset, budget)
    return {
        _trusted_point(params, coords): word for coords, word in words.items()
    }


@dataclass(frozen=True)
class OracleVerdict:
    """Outcome of a capped search.

    ``not_within_cap`` is not a non-equivalence proof; the ``unknown``
    state is reserved for callers reporting an aborted search (the
    library itself raises :class:`ResourceCap` instead).
    """

    state: str
    cap: int
    explored: int
    word: Optional[MoveWord] = None

    @property
    def equivalent(self) -> bool:
        return self.state == "equivalent"


def oracle_equivalent(
    params: SurfaceParams,
    x: SurfacePoint,
    y: SurfacePoint,
    height_cap: int,
    moveset: Moveset = Moveset.VIETA,
    budget: int = DEFAULT_BUDGET,
) -> OracleVerdict:
    """Search for y inside the capped closure of x."""
    _check_same_surface(params, x)
    _check_same_surface(params, y)
    if height_cap < x.height():
        raise ValueError("the height cap must be at least the height of x")
    words = _bfs_words(params, x.coords, height_cap, moveset, budget)
    word = words.get(y.coords)
    if word is None:
        return OracleVerdict(
            state="not_within_cap", cap=height_cap, explored=len(words)
        )
    return OracleVerdict(
        state="equivalent", cap=height_cap, explored=len(words), word=word
    )
