"""Stretched elements, LS-path data, ceil/floor, Mullineux."""

import random
from fractions import Fraction

import pytest

from ecrystal.abacus import base, roof
from ecrystal.crystal import e_op, eps, f, phi
from ecrystal.partitions import (
    conjugate,
    contains,
    e_restricted_partitions,
    first_part,
    length,
)
from ecrystal.paths import (
    StretchedElement,
    ceil,
    floor,
    ls_path,
    mullineux,
    stretched_f,
    unit_element,
)


def test_element_validation():
    with pytest.raises(ValueError):
        StretchedElement(3, 0, (((2,), Fraction(1, 2)),))  # mass != 1
    with pytest.raises(ValueError):
        StretchedElement(3, 0, (((3,), Fraction(1)),))  # not a core
    with pytest.raises(ValueError):
        StretchedElement(
            3, 0, (((2,), Fraction(1, 2)), ((5, 3, 1), Fraction(1, 2)))
        )  # increasing chain


def test_stretched_f_core_conversion():
    p = stretched_f(unit_element((3, 1, 1), 0, 3), 0)
    assert p.segments == (
        ((4, 2, 1, 1), Fraction(1, 3)),
        ((3, 1, 1), Fraction(2, 3)),
    )
    q = stretched_f(unit_element((), 1, 3), 1)
    assert q.segments == (((1,), Fraction(1)),)
    assert stretched_f(unit_element((), 0, 3), 1) is None


def test_stretched_f_matches_crystal_nullity():
    for e in (2, 3):
        for lam in e_restricted_partitions(7, e):
            p = ls_path(lam, 0, e)
            for i in range(e):
                assert (stretched_f(p, i) is None) == (f(lam, i, 0, e) is None)


def test_ls_path_221():
    p = ls_path((2, 2, 1), 0, 3)
    assert p.segments == (
        ((5, 3, 1), Fraction(1, 3)),
        ((4, 2), Fraction(1, 6)),
        ((2,), Fraction(1, 2)),
    )


def test_ls_path_trivial_cases():
    assert ls_path((), 1, 3).segments == (((), Fraction(1)),)
    assert ls_path((3, 1, 1), 0, 3).segments == (((3, 1, 1), Fraction(1)),)


def _random_peel_word(lam, m, e, rng):
    word = []
    while lam:
        i = rng.choice([i for i in range(e) if eps(lam, i, m, e) > 0])
        word.append(i)
        lam = e_op(lam, i, m, e)
    return word


@pytest.mark.parametrize("e", [2, 3])
def test_ls_path_word_independence(e):
    rng = random.Random(11)
    for lam in e_restricted_partitions(8, e):
        reference = ls_path(lam, 0, e)
        for _ in range(3):
            word = _random_peel_word(lam, 0, e, rng)
            p = unit_element((), 0, e)
            for i in reversed(word):
                p = stretched_f(p, i)
            assert p == reference


@pytest.mark.parametrize("e", [2, 3])
def test_ls_path_structure(e):
    for lam in e_restricted_partitions(9, e):
        for m in range(e):
            p = ls_path(lam, m, e)
            assert sum(q for _, q in p.segments) == 1
            for (a, _), (b, _) in zip(p.segments, p.segments[1:]):
                assert contains(a, b) and a != b


@pytest.mark.parametrize("e,n", [(2, 10), (3, 10), (4, 8)])
def test_ceil_floor_equal_roof_base(e, n):
    for lam in e_restricted_partitions(n, e):
        for m in range(e):
            assert ceil(lam, m, e) == roof(lam, m, e)
            assert floor(lam, m, e) == base(lam, m, e)


def test_e2_closed_forms():
    def staircase(k):
        return tuple(range(k, 0, -1))

    for lam in e_restricted_partitions(12, 2):
        for m in (0, 1):
            assert ceil(lam, m, 2) == staircase(length(lam))
            assert floor(lam, m, 2) == staircase(first_part(lam))


def test_mullineux_examples():
    assert mullineux((), 0, 3) == ()
    assert mullineux((1,), 0, 3) == (1,)
    assert mullineux((2,), 0, 3) == (1, 1)


@pytest.mark.parametrize("e", [2, 3, 4])
def test_mullineux_involution_and_symmetry(e):
    for lam in e_restricted_partitions(8, e):
        for m in range(e):
            image = mullineux(lam, m, e)
            assert mullineux(image, m, e) == lam
            for i in range(e):
                assert eps(lam, (m + i) % e, m, e) == eps(image, (m - i) % e, m, e)
                assert phi(lam, (m + i) % e, m, e) == phi(image, (m - i) % e, m, e)


@pytest.mark.parametrize("e", [2, 3])
def test_mullineux_conjugates_ceil_floor(e):
    for lam in e_restricted_partitions(9, e):
        for m in range(e):
            image = mullineux(lam, m, e)
            assert ceil(image, m, e) == conjugate(ceil(lam, m, e))
            assert floor(image, m, e) == conjugate(floor(lam, m, e))


def test_mass_weighted_node_counts_track_weight():
    """Sum_j q_j * N_i(nu_j) equals N_i(lam) for every residue."""
    from ecrystal.crystal import node_counts

    for e in (2, 3):
        for lam in e_restricted_partitions(8, e):
            p = ls_path(lam, 0, e)
            totals = [Fraction(0)] * e
            for core, q in p.segments:
                for i, n in enumerate(node_counts(core, 0, e)):
                    totals[i] += q * n
            assert totals == [Fraction(n) for n in node_counts(lam, 0, e)]
