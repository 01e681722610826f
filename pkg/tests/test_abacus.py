"""Beta numbers, bead moves, roof and base."""

import pytest
from hypothesis import given, strategies as st

from ecrystal.abacus import (
    BetaSet,
    base,
    base_beta,
    base_incremental,
    down_step,
    from_beta,
    is_core,
    render,
    roof,
    runner_maxima,
    to_beta,
    up_step,
)
from ecrystal.partitions import (
    contains,
    e_restricted_partitions,
    first_part,
    is_e_restricted,
)


def test_beta_set_normalization():
    b = BetaSet(3, -3, (-2, -1, 4))
    assert b.s == -1 and b.extras == (4,)
    assert b.charge == 0
    assert -5 in b and 4 in b and 2 not in b


def test_beta_of_421():
    b = to_beta((4, 2, 1), 0, 3)
    assert b.extras == (4, 1, -1) and b.s == -3
    assert from_beta(b) == (4, 2, 1)


def test_beta_trivial_and_derived():
    assert to_beta((), 0, 2) == BetaSet(2, 0, ())
    b = to_beta((4, 2), 0, 6)
    assert b.extras == (4, 1) and b.s == -2
    assert from_beta(BetaSet(3, -3, (5, 2, -1))) == (5, 3, 1)


def test_without_bead_splits_tail():
    b = BetaSet(3, 0, ())
    c = b.without_bead(-2)
    assert c.s == -3 and c.extras == (0, -1)
    assert c.charge == b.charge - 1


def test_up_step_examples():
    assert from_beta(up_step(to_beta((3, 2, 1), 2, 3))) == (4, 2, 1)
    assert from_beta(up_step(to_beta((4, 2, 1), 0, 3))) == (4, 3, 1)
    core = to_beta((5, 3, 1), 0, 3)
    assert up_step(core) == core


def test_down_step_examples():
    core = to_beta((1, 1), 0, 3)
    assert down_step(core) == core
    assert base((2, 2, 1), 0, 3) == (2,)
    assert first_part(base((2, 1), 0, 2)) == 2


def test_roof_examples():
    assert roof((2, 2, 1), 0, 3) == (5, 3, 1)
    assert roof((1, 1), 0, 3) == (1, 1)
    assert roof((), 1, 3) == ()


def test_base_a_preserved():
    b = base((3, 1, 1, 1), 0, 3)
    assert is_core(to_beta(b, 0, 3))
    assert first_part(b) == 3


def test_runner_maxima_42():
    m = runner_maxima(to_beta((4, 2), 0, 6))
    assert m == {0: -6, 1: 1, 2: -4, 3: -3, 4: 4, 5: -7}
    assert {i: m[i] + 6 for i in m} == {1: 7, 2: 2, 3: 3, 4: 10, 5: -1, 0: 0}


def test_runner_maxima_small():
    # J = {1} u Z_{<=-1}: the largest even bead is -2
    m = runner_maxima(to_beta((1,), 0, 2))
    assert m == {1: 1, 0: -2}
    empty = runner_maxima(to_beta((), 1, 3))
    assert all(empty[i] <= 1 and empty[i] % 3 == i for i in range(3))


def test_render_shows_beads():
    text = render(to_beta((4, 2, 1), 0, 3))
    rows = text.splitlines()
    assert any("4" in row for row in rows)
    assert "." in text


@pytest.mark.parametrize("e", [2, 3, 4])
def test_up_down_lemmas(e):
    for lam in e_restricted_partitions(11, e):
        for m in (0, 1):
            b = to_beta(lam, m, e)
            up = from_beta(up_step(b))
            assert contains(up, lam)
            assert is_e_restricted(up, e)
            assert len(up) == len(lam)
            down = from_beta(down_step(b))
            assert contains(lam, down)
            assert is_e_restricted(down, e)
            assert first_part(down) == first_part(lam)


@pytest.mark.parametrize("e", [2, 3, 4])
def test_roof_base_are_cores(e):
    for lam in e_restricted_partitions(10, e):
        for m in (0, 2):
            assert is_core(to_beta(roof(lam, m, e), m, e))
            assert is_core(to_beta(base(lam, m, e), m, e))


@pytest.mark.parametrize("e", [2, 3, 4])
def test_base_incremental_matches_base(e):
    for lam in e_restricted_partitions(12, e):
        for m in (0, 1):
            b = to_beta(lam, m, e)
            assert base_incremental(b) == base_beta(b)


@given(
    st.lists(st.integers(1, 6), max_size=6).map(lambda xs: tuple(sorted(xs, reverse=True))),
    st.integers(0, 3),
    st.integers(2, 4),
)
def test_beta_round_trip(lam, m, e):
    assert from_beta(to_beta(lam, m, e)) == lam
    assert to_beta(lam, m, e).charge == m
