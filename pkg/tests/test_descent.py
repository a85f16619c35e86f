"""Descent machinery: directions, last vertices, closures, orbit graphs."""

import pytest

from markoff_orbits import (
    Moveset,
    SurfaceParams,
    apply_word,
    derive_params,
    descend,
    descending_directions,
    is_in_core,
    is_in_junction,
    is_last_vertex,
    make_point,
    orbit_graph,
    torus_params,
)
from markoff_orbits.descent import _descend_full
from tests.conftest import PARAM_SUITE, scan_solutions

ONES = derive_params((1, 1, 1, 1))
MARKOFF = torus_params(0)
DOUBLE = torus_params(4)


def test_descending_directions_worked_example():
    # V3 strictly descends; V1 and V2 fix the point, so they appear with
    # change 0 (every non-increasing move is reported).
    p = make_point(ONES, (0, 1, 2))
    steps = descending_directions(ONES, p)
    table = {s.move: (s.change, s.strict) for s in steps}
    assert table == {(1,): (0, False), (2,): (0, False), (3,): (-2, True)}


def test_descending_directions_fixed_point():
    p = make_point(MARKOFF, (0, 0, 0))
    steps = descending_directions(MARKOFF, p)
    assert [(s.move, s.change) for s in steps] == [((1,), 0), ((2,), 0), ((3,), 0)]


def test_descending_directions_double_line():
    p = make_point(DOUBLE, (2, 3, -3))
    steps = descending_directions(DOUBLE, p)
    assert {s.move for s in steps} == {(2,), (3,)}
    assert all(s.change == 0 for s in steps)


def test_is_last_vertex_examples():
    assert is_last_vertex(ONES, make_point(ONES, (0, 1, 0)))
    assert not is_last_vertex(ONES, make_point(ONES, (0, 1, 2)))
    assert is_last_vertex(MARKOFF, make_point(MARKOFF, (-3, 3, 3)))


def test_descend_worked_example():
    result = descend(ONES, make_point(ONES, (0, 1, 2)))
    assert [(v.coords, w) for v, w in result.last_vertices] == [((0, 1, 0), (3,))]


def test_descend_markoff():
    p = make_point(MARKOFF, (-3, 6, 15))
    result = descend(MARKOFF, p)
    assert [(v.coords, w) for v, w in result.last_vertices] == [((-3, 3, 3), (3, 2))]


def test_descend_last_vertex_is_its_own_target():
    p = make_point(MARKOFF, (-3, 3, 3))
    result = descend(MARKOFF, p)
    assert [(v.coords, w) for v, w in result.last_vertices] == [((-3, 3, 3), ())]


def test_descend_witness_soundness():
    for params in PARAM_SUITE[:10]:
        for coords in scan_solutions(params, 14)[:6]:
            p = make_point(params, coords)
            result = descend(params, p)
            for v, word in result.last_vertices:
                replay = p
                h = replay.height()
                for i in word:
                    replay = apply_word(params, replay, (i,))
                    assert replay.height() <= h
                    h = replay.height()
                assert replay.coords == v.coords
                assert is_last_vertex(params, v)


def test_descend_deterministic():
    p = make_point(ONES, (0, 1, 2))
    assert descend(ONES, p) == descend(ONES, p)


def test_descend_junction_showcase():
    params = SurfaceParams(alpha=(0, 6, -6), beta=124)
    result = descend(params, make_point(params, (2, -10, 10)))
    assert [v.coords for v, _ in result.last_vertices] == [(2, -4, -8), (2, 8, 4)]


def test_descend_mcg_pinned_words():
    result = descend(ONES, make_point(ONES, (0, 1, 2)), Moveset.MCG)
    assert [(v.coords, w) for v, w in result.last_vertices] == [((0, 1, 0), (3, 2))]
    data = _descend_full(ONES, (0, 1, 2), Moveset.MCG)
    assert data.visited[(2, 1, 0)] == (3, 1)


def test_orbit_graph_worked_example():
    graph = orbit_graph(ONES, make_point(ONES, (0, 1, 2)), 3)
    assert {v.coords for v in graph.vertices} == {(0, 1, 2), (0, 1, 0), (2, 1, 0)}
    edges = {(e.src.coords, e.dst.coords, e.move) for e in graph.edges}
    assert edges == {
        ((0, 1, 0), (0, 1, 2), (3,)),
        ((0, 1, 0), (2, 1, 0), (1,)),
    }
    assert not graph.truncated


def test_orbit_graph_fixed_point():
    graph = orbit_graph(MARKOFF, make_point(MARKOFF, (0, 0, 0)), 10)
    assert [v.coords for v in graph.vertices] == [(0, 0, 0)]
    assert graph.edges == ()
    assert not graph.truncated


def test_orbit_graph_markoff_cap24():
    graph = orbit_graph(MARKOFF, make_point(MARKOFF, (-3, 3, 3)), 24)
    coords = {v.coords for v in graph.vertices}
    assert (-3, 6, 15) in coords and (-6, 3, 3) in coords
    assert graph.truncated
    for e in graph.edges:
        assert apply_word(MARKOFF, e.src, e.move).coords == e.dst.coords


def test_orbit_graph_cap_precondition():
    with pytest.raises(ValueError):
        orbit_graph(MARKOFF, make_point(MARKOFF, (-3, 3, 3)), 5)


def test_orbit_graph_mcg_edges_replay():
    # Pair-move labels are stored as seen from the edge's recorded
    # source, so every edge replays exactly; dedup keeps one entry per
    # generator and endpoint pair.
    for params, coords, cap in (
        (MARKOFF, (-3, 3, 3), 30),
        (ONES, (0, 1, 2), 6),
        (DOUBLE, (2, 3, -3), 16),
    ):
        graph = orbit_graph(params, make_point(params, coords), cap, Moveset.MCG)
        assert graph.edges or len(graph.vertices) == 1
        seen = set()
        for e in graph.edges:
            assert apply_word(params, e.src, e.move).coords == e.dst.coords
            key = (e.src.coords, e.dst.coords, e.move)
            assert key not in seen
            seen.add(key)


def test_unique_descent_direction_outside_exceptional_sets():
    # At most one weakly descending direction away from the core and the
    # junction set.
    for params in PARAM_SUITE:
        for coords in scan_solutions(params, 20):
            p = make_point(params, coords)
            if is_in_core(params, p) or is_in_junction(params, p):
                continue
            steps = descending_directions(params, p)
            assert len(steps) <= 1, (params, coords, steps)


def test_orbit_tree_outside_exceptional_sets():
    # Orbits staying clear of both exceptional sets are trees with at
    # most two last vertices.
    seeds = [
        (MARKOFF, (-3, 3, 3)),
        (MARKOFF, (-3, 6, 15)),
        (torus_params(-2), (-4, -3, -3)),
    ]
    for params, coords in seeds:
        p = make_point(params, coords)
        graph = orbit_graph(params, p, p.height() + 18)
        clean = all(
            not is_in_core(params, v) and not is_in_junction(params, v)
            for v in graph.vertices
        )
        if not clean:
            continue
        assert len(graph.edges) == len(graph.vertices) - 1  # connected + acyclic
        result = descend(params, p)
        assert len(result.last_vertices) <= 2


def test_last_vertex_dichotomy_when_closure_avoids_junctions():
    # If the weakly-decreasing closure carries no junction point, the
    # last vertices are all in the core or all outside it.
    for params in PARAM_SUITE:
        for coords in scan_solutions(params, 14)[:8]:
            data = _descend_full(params, coords, Moveset.VIETA)
            if any(
                is_in_junction(params, make_point(params, c)) for c in data.visited
            ):
                continue
            flags = {
                is_in_core(params, make_point(params, c)) for c in data.lasts
            }
            assert len(flags) == 1, (params, coords, data.lasts)
