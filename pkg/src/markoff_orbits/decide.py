"""Orbit-equivalence decision procedures with verifiable certificates.

The decision runs in stages.  Both query points are first driven down
to their last vertices; a shared last vertex or a shared component of
the core settles the question immediately.  Otherwise equivalence can
only pass through the junction set, whose members are confined (per
coordinate slice x_i = +-2) to exactly computable boxes: outside a
certified bound the two complementary moves cannot both be
non-increasing.  Tracing the finite region made of the core and those
boxes from each side decides the remaining cases.  Degenerate slices
whose restriction is a perfect square ("double lines") are handled by a
separate isolation argument: their points are fixed by both
complementary involutions, so distinct ones are never equivalent.

Every Equivalent certificate carries a move word that is replayed
before the certificate is returned; mapping class group certificates
always carry even words.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .descent import DEFAULT_BUDGET, Moveset, ResourceCap, _descend_full
from .exceptional import _core_coord_set, _junction_coords, core_components
from .surface import (
    MoveWord,
    SurfaceParams,
    SurfacePoint,
    _check_same_surface,
    _trusted_point,
    _vieta_coords,
    apply_word,
    reverse_word,
    simplify_word,
)

__all__ = [
    "Certificate",
    "DegenerateUnbounded",
    "Reason",
    "SliceClass",
    "decide_gamma",
    "decide_mcg",
    "probe_junction_pairs",
    "slice_analysis",
    "trace_bounded_region",
]


class DegenerateUnbounded(RuntimeError):
    """Raised when a double-line slice would require unbounded tracing."""


@dataclass(frozen=True)
class SliceClass:
    """Classification of the slice x_coord = 2*sign.

    kind is one of "nondegenerate", "parallel_lines" and "double_line".
    For the first two kinds ``box_bound`` is a certified M: no point of
    the slice with max(|x_j|, |x_l|) > M satisfies both complementary
    non-increase conditions.  ``line_values`` lists the integer values
    of u = x_j + sign*x_l on which parallel-line slices live;
    ``double_line_value`` is u on the double line (half-integral when
    the relevant coefficient is odd, in which case the line carries no
    integral point at all).
    """

    coord: int
    sign: int
    kind: str
    box_bound: Optional[int]
    line_values: Tuple[int, ...] = ()
    double_line_value: Optional[Fraction] = None


def _poly_mul(p: Sequence[int], q: Sequence[int]) -> List[int]:
    out = [0] * (len(p) + len(q) - 1)
    for a, pa in enumerate(p):
        for b, qb in enumerate(q):
            out[a + b] += pa * qb
    return out


def _cauchy_bound(coeffs: Sequence[int]) -> int:
    # All real roots of the polynomial (ascending coefficients, nonzero
    # leading term) lie within |u| <= 1 + max|c_k| / |c_lead|.
    lead = coeffs[-1]
    rest = max(abs(c) for c in coeffs[:-1])
    return 1 + -(-rest // abs(lead))


def slice_analysis(params: SurfaceParams, coord: int, sign: int) -> SliceClass:
    """Classify one x_coord = 2*sign slice and certify its box bound.

    Substituting the slice value turns the surface equation into
    (x_j + sign*x_l)^2 - a_j*x_j - a_l*x_l + C = 0 with
    C = 4 - 2*sign*a_coord - beta.  Parameterizing by u = x_j + sign*x_l
    makes both complementary non-increase conditions cubic inequalities
    in u with opposite leading signs, so they exclude each other beyond
    a bound computed from a root bound of the two cubics.
    """
    if coord not in (1, 2, 3):
        raise ValueError("coord must be 1, 2 or 3")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    j, l = [c for c in (1, 2, 3) if c != coord]
    ai = params.alpha[coord - 1]
    aj = params.alpha[j - 1]
    al = params.alpha[l - 1]
    eps = sign
    C = 4 - 2 * eps * ai - params.beta
    d = aj - eps * al

    if d != 0:
        # One rational slice point per u: x_j = (u^2 - eps*a_l*u + C)/d.
        A = [C, -eps * al, 1]
        B = [aj * d, -2 * d]
        P = _poly_mul(B, [2 * A[0] + B[0], 2 * A[1] + B[1], 2 * A[2]])
        Ap = [-eps * C, eps * aj, -eps]
        Bp = [al * d, -2 * eps * d]
        Q = _poly_mul(Bp, [2 * Ap[0] + Bp[0], 2 * Ap[1] + Bp[1], 2 * Ap[2]])
        u_bound = max(_cauchy_bound(P), _cauchy_bound(Q))
        mj = -(-(u_bound * u_bound + abs(al) * u_bound + abs(C)) // abs(d))
        return SliceClass(
            coord=coord,
            sign=sign,
            kind="nondegenerate",
            box_bound=max(1, u_bound + mj),
        )

    # a_j = eps*a_l: the slice degenerates to u^2 - a_j*u + C = 0.
    disc = aj * aj - 4 * C
    if disc == 0:
        return SliceClass(
            coord=coord,
            sign=sign,
            kind="double_line",
            box_bound=None,
            double_line_value=Fraction(aj, 2),
        )
    roots: List[int] = []
    if disc > 0:
        s = isqrt(disc)
        if s * s == disc and (aj + s) % 2 == 0:
            roots = sorted({(aj + s) // 2, (aj - s) // 2})
    bound = 1
    for u0 in roots:
        b = aj - 2 * u0
        if b > 0:
            lo, hi = Fraction(2 * u0 + b, 2), Fraction(-b, 2)
        else:
            lo, hi = Fraction(-b, 2), Fraction(2 * u0 + b, 2)
        if lo > hi:
            continue
        mj = max(abs(lo), abs(hi))
        mj_int = int(mj) if mj.denominator == 1 else int(mj) + 1
        bound = max(bound, mj_int + abs(u0))
    return SliceClass(
        coord=coord,
        sign=sign,
        kind="parallel_lines",
        box_bound=bound,
        line_values=tuple(roots),
    )


_SLICE_CACHE: Dict[SurfaceParams, Tuple[SliceClass, ...]] = {}


def _all_slices(params: SurfaceParams) -> Tuple[SliceClass, ...]:
    cached = _SLICE_CACHE.get(params)
    if cached is None:
        cached = tuple(
            slice_analysis(params, coord, sign)
            for coord in (1, 2, 3)
            for sign in (1, -1)
        )
        _SLICE_CACHE[params] = cached
    return cached


def probe_junction_pairs(
    params: SurfaceParams, s: SurfacePoint
) -> Tuple[Tuple[int, int], ...]:
    """Index pairs (i, i') whose three-step word V_i V_i' V_i brings the
    i-th coordinate of s to absolute value 2.

    A screen for junction access from a last vertex; region tracing is
    the authoritative check, so an empty probe is only a hint.
    """
    _check_same_surface(params, s)
    alpha = params.alpha
    hits = []
    for i in (1, 2, 3):
        first = _vieta_coords(alpha, s.coords, i)
        for i2 in (1, 2, 3):
            z = _vieta_coords(alpha, _vieta_coords(alpha, first, i2), i)
            if abs(z[i - 1]) == 2:
                hits.append((i, i2))
    return tuple(hits)


def _slice_map(slices: Iterable[SliceClass]) -> Dict[Tuple[int, int], SliceClass]:
    return {(sc.coord, sc.sign): sc for sc in slices}


def _region_member(coords, core_set, slice_map) -> bool:
    if coords in core_set:
        return True
    for f in (1, 2, 3):
        v = coords[f - 1]
        if v != 2 and v != -2:
            continue
        sc = slice_map.get((f, 1 if v > 0 else -1))
        if sc is None or sc.kind == "double_line":
            continue
        j, l = [c for c in (1, 2, 3) if c != f]
        if abs(coords[j - 1]) <= sc.box_bound and abs(coords[l - 1]) <= sc.box_bound:
            return True
    return False


class _RegionTrace:
    """Closure of source vertices inside the core + box region.

    visited maps coordinates to (root, word-from-root).  The induced
    edge list and the involution-fixed members are retained so parity
    questions about orbit cycles can be answered on the trace alone.
    """

    __slots__ = ("visited", "junctions", "edges", "fixed")

    def __init__(self, visited, junctions, edges, fixed):
        self.visited = visited
        self.junctions = junctions
        self.edges = edges
        self.fixed = fixed


_TRACE_CACHE: Dict[tuple, _RegionTrace] = {}


def _region_trace(
    params: SurfaceParams, sources: Tuple[tuple, ...], budget: int = DEFAULT_BUDGET
) -> _RegionTrace:
    key = (params, sources, budget)
    cached = _TRACE_CACHE.get(key)
    if cached is not None:
        return cached
    alpha = params.alpha
    core_set = frozenset(_core_coord_set(params))
    slice_map = _slice_map(_all_slices(params))

    visited: Dict[tuple, Tuple[tuple, MoveWord]] = {}
    queue = deque()
    for s in sources:
        if s not in visited and _region_member(s, core_set, slice_map):
            visited[s] = (s, ())
            queue.append(s)
    while queue:
        coords = queue.popleft()
        root, word = visited[coords]
        for i in (1, 2, 3):
            image = _vieta_coords(alpha, coords, i)
            if image == coords or image in visited:
                continue
            if not _region_member(image, core_set, slice_map):
                continue
            if len(visited) >= budget:
                raise ResourceCap(
                    f"region trace exceeded the budget of {budget} vertices"
                )
            visited[image] = (root, word + (i,))
            queue.append(image)

    junctions = tuple(
        sorted(c for c in visited if _junction_coords(alpha, c))
    )
    edges = []
    fixed = []
    for coords in visited:
        for i in (1, 2, 3):
            image = _vieta_coords(alpha, coords, i)
            if image == coords:
                fixed.append((coords, i))
            elif image in visited and coords < image:
                edges.append((coords, image, i))
    trace = _RegionTrace(
        visited=visited,
        junctions=junctions,
        edges=tuple(sorted(edges)),
        fixed=tuple(sorted(fixed)),
    )
    _TRACE_CACHE[key] = trace
    return trace


def trace_bounded_region(
    params: SurfaceParams,
    start: SurfacePoint,
    slices: Sequence[SliceClass],
    budget: int = DEFAULT_BUDGET,
) -> Tuple[SurfacePoint, ...]:
    """Closure of start under moves staying in the core or a slice box.

    Raises :class:`DegenerateUnbounded` when the start sits on a
    double-line slice outside the core, where no finite box exists; a
    start outside the region altogether yields an empty closure.
    """
    _check_same_surface(params, start)
    core_set = frozenset(_core_coord_set(params))
    slice_map = _slice_map(slices)
    if not _region_member(start.coords, core_set, slice_map):
        for f in (1, 2, 3):
            v = start.coords[f - 1]
            if v in (2, -2):
                sc = slice_map.get((f, 1 if v > 0 else -1))
                if sc is not None and sc.kind == "double_line":
                    raise DegenerateUnbounded(
                        f"start {start.canonical()} lies on the double-line "
                        f"slice x_{f} = {v}"
                    )
        return ()

    alpha = params.alpha
    visited = {start.coords}
    queue = deque((start.coords,))
    while queue:
        coords = queue.popleft()
        for i in (1, 2, 3):
            image = _vieta_coords(alpha, coords, i)
            if image == coords or image in visited:
                continue
            if not _region_member(image, core_set, slice_map):
                continue
            if len(visited) >= budget:
                raise ResourceCap(
                    f"region trace exceeded the budget of {budget} vertices"
                )
            visited.add(image)
            queue.append(image)
    return tuple(_trusted_point(params, c) for c in sorted(visited))


@dataclass(frozen=True)
class Reason:
    """Structured explanation for a negative verdict."""

    code: str
    detail: str


@dataclass(frozen=True)
class Certificate:
    """Decision output; Equivalent certificates replay exactly.

    ``word`` maps x to y (leftmost move applied first) and is present
    exactly on Equivalent verdicts; for mapping class group decisions it
    always has even length.  ``trace`` carries machine-readable
    diagnostics: the stage that settled the verdict, the last vertices
    of both sides, and the junction points visited while tracing.
    """

    verdict: str
    moveset: Moveset
    word: Optional[MoveWord] = None
    reason: Optional[Reason] = None
    trace: dict = field(default_factory=dict)

    @property
    def equivalent(self) -> bool:
        return self.verdict == "equivalent"


def _certify(
    params: SurfaceParams,
    x: SurfacePoint,
    y: SurfacePoint,
    word: MoveWord,
    moveset: Moveset,
    stage: str,
    trace: dict,
) -> Certificate:
    word = simplify_word(word)
    replay = apply_word(params, x, word)
    if replay.coords != y.coords:
        raise AssertionError(
            f"internal error: certificate word {word} maps {x.canonical()} "
            f"to {replay.canonical()}, not {y.canonical()}"
        )
    if moveset is Moveset.MCG and len(word) % 2 != 0:
        raise AssertionError(
            f"internal error: odd word {word} offered as a mapping class "
            f"group certificate"
        )
    trace = dict(trace)
    trace["stage"] = stage
    return Certificate(
        verdict="equivalent", moveset=moveset, word=word, trace=trace
    )


def _not_equivalent(moveset, code, detail, stage, trace) -> Certificate:
    trace = dict(trace)
    trace["stage"] = stage
    return Certificate(
        verdict="not_equivalent",
        moveset=moveset,
        reason=Reason(code=code, detail=detail),
        trace=trace,
    )


def _component_path(
    params: SurfaceParams,
    members: frozenset,
    moveset: Moveset,
    start: tuple,
    goal: tuple,
) -> MoveWord:
    # Breadth-first path between two members of one exceptional-set
    # component, moving only inside the set.
    if start == goal:
        return ()
    alpha = params.alpha
    moves = moveset.moves()
    seen: Dict[tuple, MoveWord] = {start: ()}
    queue = deque((start,))
    while queue:
        coords = queue.popleft()
        for move in moves:
            image = coords
            for i in move:
                image = _vieta_coords(alpha, image, i)
            if image in seen or image not in members:
                continue
            seen[image] = seen[coords] + move
            if image == goal:
                return seen[image]
            queue.append(image)
    raise AssertionError(
        "internal error: no in-set path between members of one component"
    )


def _stage1(params, x, y, moveset, budget):
    """Descent overlap, shared last vertices, shared core components.

    Returns (certificate or None, descent of x, descent of y).
    """
    dx = _descend_full(params, x.coords, moveset, budget)
    dy = _descend_full(params, y.coords, moveset, budget)
    base_trace = {
        "last_vertices_x": dx.lasts,
        "last_vertices_y": dy.lasts,
    }

    if y.coords in dx.visited:
        cert = _certify(
            params, x, y, dx.visited[y.coords], moveset, "descent_overlap", base_trace
        )
        return cert, dx, dy
    if x.coords in dy.visited:
        cert = _certify(
            params,
            x,
            y,
            reverse_word(dy.visited[x.coords]),
            moveset,
            "descent_overlap",
            base_trace,
        )
        return cert, dx, dy

    common = sorted(set(dx.lasts) & set(dy.lasts))
    if common:
        s = common[0]
        word = dx.visited[s] + reverse_word(dy.visited[s])
        cert = _certify(
            params, x, y, word, moveset, "shared_last_vertex", base_trace
        )
        return cert, dx, dy

    catalog = core_components(params, moveset)
    index = catalog.component_index()
    members = frozenset(index)
    comp_y: Dict[int, tuple] = {}
    for s in dy.lasts:
        n = index.get(s)
        if n is not None and n not in comp_y:
            comp_y[n] = s
    for s_x in dx.lasts:
        n = index.get(s_x)
        if n is not None and n in comp_y:
            s_y = comp_y[n]
            word = (
                dx.visited[s_x]
                + _component_path(params, members, moveset, s_x, s_y)
                + reverse_word(dy.visited[s_y])
            )
            cert = _certify(
                params, x, y, word, moveset, "shared_core_component", base_trace
            )
            return cert, dx, dy
    return None, dx, dy


def _double_line_lookup(params, slice_map, coords):
    # A junction point has exactly one coordinate of absolute value 2
    # (two would force a cross product <= 4, putting it in the core).
    for f in (1, 2, 3):
        v = coords[f - 1]
        if v in (2, -2):
            return slice_map[(f, 1 if v > 0 else -1)]
    raise AssertionError("junction point without a +-2 coordinate")


def _decide_gamma_inner(params, x, y, descend_budget, trace_budget):
    if x.coords == y.coords:
        return Certificate(
            verdict="equivalent",
            moveset=Moveset.VIETA,
            word=(),
            trace={"stage": "identical"},
        )

    cert, dx, dy = _stage1(params, x, y, Moveset.VIETA, descend_budget)
    if cert is not None:
        return cert

    trace_info = {
        "last_vertices_x": dx.lasts,
        "last_vertices_y": dy.lasts,
        "probes_x": tuple(
            (s, probe_junction_pairs(params, _trusted_point(params, s)))
            for s in dx.lasts
        ),
        "probes_y": tuple(
            (s, probe_junction_pairs(params, _trusted_point(params, s)))
            for s in dy.lasts
        ),
    }

    alpha = params.alpha
    slices = _all_slices(params)
    slice_map = _slice_map(slices)

    # Double-line isolation: a junction last vertex on a double line is
    # fixed by both complementary involutions and its orbit meets
    # neither the core nor any other junction point, so failing the
    # shared-vertex stage already settles the verdict.
    for lasts in (dx.lasts, dy.lasts):
        for s in lasts:
            if _junction_coords(alpha, s):
                sc = _double_line_lookup(params, slice_map, s)
                if sc.kind == "double_line":
                    return _not_equivalent(
                        Moveset.VIETA,
                        "double_line_isolation",
                        f"last vertex {s} lies on the double-line slice "
                        f"x_{sc.coord} = {2 * sc.sign} and is fixed by both "
                        "complementary involutions",
                        "double_line",
                        trace_info,
                    )

    core_set = frozenset(_core_coord_set(params))
    sources_x = tuple(
        s for s in dx.lasts if _region_member(s, core_set, slice_map)
    )
    sources_y = tuple(
        s for s in dy.lasts if _region_member(s, core_set, slice_map)
    )
    trace_x = _region_trace(params, sources_x, trace_budget)
    trace_y = _region_trace(params, sources_y, trace_budget)
    trace_info["junctions_x"] = trace_x.junctions
    trace_info["junctions_y"] = trace_y.junctions

    common = sorted(set(trace_x.visited) & set(trace_y.visited))
    if common:
        meet = common[0]
        root_x, walk_x = trace_x.visited[meet]
        root_y, walk_y = trace_y.visited[meet]
        word = (
            dx.visited[root_x]
            + walk_x
            + reverse_word(walk_y)
            + reverse_word(dy.visited[root_y])
        )
        return _certify(
            params, x, y, word, Moveset.VIETA, "junction_region", trace_info
        )

    if not trace_x.junctions or not trace_y.junctions:
        if not trace_x.junctions and not trace_y.junctions:
            return _not_equivalent(
                Moveset.VIETA,
                "distinct_last_vertex_components",
                "both orbits avoid the junction set and their last vertices "
                "share no core component",
                "junction_region",
                trace_info,
            )
        side = "x" if not trace_x.junctions else "y"
        return _not_equivalent(
            Moveset.VIETA,
            "empty_junction_intersection",
            f"the orbit of {side} provably misses the junction set",
            "junction_region",
            trace_info,
        )
    return _not_equivalent(
        Moveset.VIETA,
        "distinct_junction_regions",
        "both orbits reach the junction set but their bounded regions are "
        "disjoint",
        "junction_region",
        trace_info,
    )


def decide_gamma(
    params: SurfaceParams,
    x: SurfacePoint,
    y: SurfacePoint,
    descend_budget: int = DEFAULT_BUDGET,
    trace_budget: int = DEFAULT_BUDGET,
) -> Certificate:
    """Decide whether x and y lie in one orbit of the full move group."""
    _check_same_surface(params, x)
    _check_same_surface(params, y)
    return _decide_gamma_inner(params, x, y, descend_budget, trace_budget)


def _word_to_trace_vertex(g_word, dxg, dyg, trace, coords) -> MoveWord:
    # A word from x to a vertex known from descent or the region trace.
    if coords in dxg.visited:
        return dxg.visited[coords]
    if coords in trace.visited:
        root, walk = trace.visited[coords]
        if root in dxg.visited:
            return dxg.visited[root] + walk
        return g_word + dyg.visited[root] + walk
    return g_word + dyg.visited[coords]


def _odd_closed_walk(trace: _RegionTrace) -> Optional[Tuple[tuple, MoveWord]]:
    # Two-color the traced subgraph; a conflict edge closes an odd walk.
    adjacency: Dict[tuple, List[Tuple[tuple, int]]] = {}
    for a, b, i in trace.edges:
        adjacency.setdefault(a, []).append((b, i))
        adjacency.setdefault(b, []).append((a, i))
    color: Dict[tuple, int] = {}
    walk_word: Dict[tuple, MoveWord] = {}
    for start in sorted(trace.visited):
        if start in color:
            continue
        color[start] = 0
        walk_word[start] = ()
        queue = deque((start,))
        while queue:
            coords = queue.popleft()
            for image, i in sorted(adjacency.get(coords, ())):
                if image not in color:
                    color[image] = 1 - color[coords]
                    walk_word[image] = walk_word[coords] + (i,)
                    queue.append(image)
                elif color[image] == color[coords]:
                    word = walk_word[coords] + (i,) + reverse_word(walk_word[image])
                    return start, word
    return None


def _decide_mcg_inner(params, x, y, descend_budget, trace_budget):
    if x.coords == y.coords:
        return Certificate(
            verdict="equivalent",
            moveset=Moveset.MCG,
            word=(),
            trace={"stage": "identical"},
        )

    cert, dx, dy = _stage1(params, x, y, Moveset.MCG, descend_budget)
    if cert is not None:
        return cert

    trace_info = {
        "last_vertices_x": dx.lasts,
        "last_vertices_y": dy.lasts,
    }

    gamma_cert = _decide_gamma_inner(params, x, y, descend_budget, trace_budget)
    if not gamma_cert.equivalent:
        return _not_equivalent(
            Moveset.MCG,
            gamma_cert.reason.code,
            gamma_cert.reason.detail,
            "gamma_" + gamma_cert.trace["stage"],
            trace_info,
        )
    g_word = gamma_cert.word
    if len(g_word) % 2 == 0:
        return _certify(
            params, x, y, g_word, Moveset.MCG, "even_gamma_word", trace_info
        )

    # The connecting word is odd, so the two points are in one mapping
    # class group orbit exactly when the common full orbit carries an
    # odd stabilizer element.  Every involution-fixed orbit point shows
    # up among the descent closures or the traced region, and every
    # orbit cycle lies inside the traced region, so both odd sources are
    # decidable on this finite data.
    alpha = params.alpha
    slices = _all_slices(params)
    slice_map = _slice_map(slices)
    core_set = frozenset(_core_coord_set(params))
    dxg = _descend_full(params, x.coords, Moveset.VIETA, descend_budget)
    dyg = _descend_full(params, y.coords, Moveset.VIETA, descend_budget)
    sources = tuple(
        sorted(
            s
            for s in set(dxg.lasts) | set(dyg.lasts)
            if _region_member(s, core_set, slice_map)
        )
    )
    trace = _region_trace(params, sources, trace_budget)

    candidates = sorted(
        set(dxg.visited) | set(dyg.visited) | set(trace.visited)
    )
    for coords in candidates:
        for i in (1, 2, 3):
            if _vieta_coords(alpha, coords, i) == coords:
                rho = _word_to_trace_vertex(g_word, dxg, dyg, trace, coords)
                word = rho + (i,) + reverse_word(rho) + g_word
                return _certify(
                    params,
                    x,
                    y,
                    word,
                    Moveset.MCG,
                    "parity_fixed_point",
                    trace_info,
                )

    odd = _odd_closed_walk(trace)
    if odd is not None:
        base, closed = odd
        rho = _word_to_trace_vertex(g_word, dxg, dyg, trace, base)
        word = rho + closed + reverse_word(rho) + g_word
        return _certify(
            params, x, y, word, Moveset.MCG, "parity_odd_cycle", trace_info
        )

    return _not_equivalent(
        Moveset.MCG,
        "parity_obstruction",
        "the points are connected only by odd words and the orbit carries "
        "no odd stabilizer element",
        "parity",
        trace_info,
    )


def decide_mcg(
    params: SurfaceParams,
    x: SurfacePoint,
    y: SurfacePoint,
    descend_budget: int = DEFAULT_BUDGET,
    trace_budget: int = DEFAULT_BUDGET,
) -> Certificate:
    """Decide whether x and y lie in one mapping class group orbit.

    Certificates carry even words: the group is the index-two subgroup
    of even words in the full move group.
    """
    _check_same_surface(params, x)
    _check_same_surface(params, y)
    return _decide_mcg_inner(params, x, y, descend_budget, trace_budget)
