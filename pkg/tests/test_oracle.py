"""Brute-force oracle: capped closures, verdicts, agreement."""

import pytest

from markoff_orbits import (
    Moveset,
    apply_word,
    bfs_orbit,
    decide_gamma,
    decide_mcg,
    derive_params,
    make_point,
    oracle_equivalent,
    torus_params,
)

ONES = derive_params((1, 1, 1, 1))
MARKOFF = torus_params(0)


def test_bfs_orbit_markoff_chain():
    p = make_point(MARKOFF, (-3, 3, 3))
    orbit = bfs_orbit(MARKOFF, p, 24)
    coords = {q.coords for q in orbit}
    assert {(-3, 6, 15), (-6, 3, 3), (-3, 6, 3)} <= coords


def test_bfs_orbit_worked_example():
    p = make_point(ONES, (0, 1, 2))
    orbit = bfs_orbit(ONES, p, 3)
    assert {q.coords for q in orbit} == {(0, 1, 2), (0, 1, 0), (2, 1, 0)}


def test_bfs_orbit_at_start_height():
    p = make_point(MARKOFF, (-3, 3, 3))
    orbit = bfs_orbit(MARKOFF, p, p.height())
    assert {q.coords for q in orbit} == {(-3, 3, 3)}


def test_bfs_orbit_words_replay():
    p = make_point(MARKOFF, (-3, 3, 3))
    for q, word in bfs_orbit(MARKOFF, p, 30).items():
        assert apply_word(MARKOFF, p, word).coords == q.coords


def test_bfs_orbit_monotone_in_cap():
    p = make_point(MARKOFF, (-3, 3, 3))
    small = {q.coords for q in bfs_orbit(MARKOFF, p, 20)}
    large = {q.coords for q in bfs_orbit(MARKOFF, p, 28)}
    assert small <= large


def test_bfs_orbit_cap_precondition():
    p = make_point(MARKOFF, (-3, 3, 3))
    with pytest.raises(ValueError):
        bfs_orbit(MARKOFF, p, 5)


def test_oracle_equivalent_markoff():
    x = make_point(MARKOFF, (-3, 3, 3))
    y = make_point(MARKOFF, (-3, 6, 15))
    verdict = oracle_equivalent(MARKOFF, x, y, 30)
    assert verdict.equivalent
    assert verdict.word == (2, 3)
    assert apply_word(MARKOFF, x, verdict.word).coords == y.coords


def test_oracle_double_line_not_within_cap():
    params = torus_params(4)
    x = make_point(params, (2, 3, -3))
    y = make_point(params, (2, 4, -4))
    verdict = oracle_equivalent(params, x, y, 60)
    assert verdict.state == "not_within_cap"
    assert not verdict.equivalent


def test_oracle_identity():
    x = make_point(MARKOFF, (-3, 3, 3))
    verdict = oracle_equivalent(MARKOFF, x, x, x.height())
    assert verdict.equivalent and verdict.word == ()


def test_oracle_mcg_agreement_spot_checks():
    x = make_point(ONES, (0, 1, 2))
    y = make_point(ONES, (0, 1, 0))
    verdict = oracle_equivalent(ONES, x, y, 30, Moveset.MCG)
    assert verdict.equivalent
    assert len(verdict.word) % 2 == 0
    assert decide_mcg(ONES, x, y).equivalent

    a = make_point(MARKOFF, (-3, 3, 3))
    b = make_point(MARKOFF, (-6, 3, 3))
    assert decide_gamma(MARKOFF, a, b).equivalent
    assert oracle_equivalent(MARKOFF, a, b, 40).equivalent
    # odd-only connection: the mapping class group oracle cannot reach it
    mcg_verdict = oracle_equivalent(MARKOFF, a, b, 40, Moveset.MCG)
    assert mcg_verdict.state == "not_within_cap"
    assert not decide_mcg(MARKOFF, a, b).equivalent
