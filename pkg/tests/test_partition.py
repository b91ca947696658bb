import pytest
from hypothesis import given

from conftest import partitions_upto
from jacksym.field import ALPHA, ONE, poly
from jacksym.partition import (EMPTY, MoveUp, Partition, bottomed_split, dominance_leq,
                               dominance_lt, enumerate_filtrations, full_hook_product,
                               hook_product, is_horizontal_strip, move_up, moving_down_set,
                               moving_up_set, revlex_index, revlex_order)

P = Partition


def test_construction_and_parsing():
    assert P.parse("3,1,1") == P((3, 1, 1))
    assert P.parse("") == EMPTY
    assert str(P((3, 1))) == "3,1"
    assert P((2, 1, 0)) == P((2, 1))
    assert P.sorted([1, 3, 0, 2]) == P((3, 2, 1))
    for bad in ("1,x", "0,1", "-1"):
        with pytest.raises(ValueError):
            P.parse(bad)
    with pytest.raises(ValueError):
        P((1, 2))


def test_statistics():
    la = P((3, 1, 1))
    assert la.z() == 3 * 2
    assert la.m_factorial() == 2
    assert la.conjugate() == P((3, 1, 1))
    assert P((4, 2)).conjugate() == P((2, 2, 1, 1))


def test_revlex_order():
    assert revlex_order(4) == (P((4,)), P((3, 1)), P((2, 2)), P((2, 1, 1)), P((1, 1, 1, 1)))
    assert [len(revlex_order(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert revlex_index(P((4,))) == 0


@pytest.mark.parametrize("n", range(1, 11))
def test_revlex_extends_dominance_and_moves_go_up(n):
    order = revlex_order(n)
    for i, la in enumerate(order):
        for mu in order[i + 1:]:
            assert not dominance_lt(la, mu)        # later in revlex never dominates
        for nu in moving_up_set(la):
            assert dominance_lt(la, nu)


def test_dominance_unequal_weights():
    assert not dominance_leq(P((1,)), P((2,)))
    assert dominance_leq(P((2, 2)), P((3, 1)))
    assert not dominance_leq(P((3, 3)), P((4, 1, 1)))
    assert not dominance_leq(P((4, 1, 1)), P((3, 3)))


@given(partitions_upto(12))
def test_conjugation_is_an_involution(la):
    assert la.conjugate().conjugate() == la
    assert sum(la.conjugate()) == sum(la)


def test_hooks():
    assert full_hook_product(P((1,)), "upper") == ALPHA
    assert full_hook_product(P((1, 1)), "lower") == poly(2)
    assert hook_product(P((2,)), [], "lower") == ONE
    # J_(2) = alpha^2 * 2! * Q_(2) needs h^*((2)) = alpha(2 alpha)
    assert full_hook_product(P((2,)), "upper") == ALPHA * ALPHA * 2


def test_bottomed_split():
    assert bottomed_split(EMPTY, P((1,))) == (set(), set(), {(1, 1)}, set())
    assert bottomed_split(P((1,)), P((2,))) == (set(), {(1, 1)}, {(1, 2)}, {(1, 1)})
    mb, mu_u, lb, lu = bottomed_split(P((2, 1)), P((2, 1)))
    assert not mb and not lb
    with pytest.raises(ValueError):
        bottomed_split(P((3,)), P((2, 1)))


@given(partitions_upto(8), partitions_upto(8))
def test_bottomed_split_partitions_cells(mu, la):
    if not la.contains(mu):
        return
    mb, mu_u, lb, lu = bottomed_split(mu, la)
    assert mb | mu_u == set(mu.cells()) and not mb & mu_u
    assert lb | lu == set(la.cells()) and not lb & lu


def test_horizontal_strips():
    assert is_horizontal_strip(P((2, 1)), P((3, 1)), 1)
    assert not is_horizontal_strip(P((1,)), P((2, 2)), 3)
    assert is_horizontal_strip(P((2, 1)), P((2, 1)), 0)
    assert not is_horizontal_strip(P((2, 1)), P((3, 1)), 2)


def test_moves():
    assert move_up(P((1, 1)), MoveUp(1, 2, 1)) == P((2,))
    assert move_up(P((2, 2, 1, 1)), MoveUp(2, 3, 1)) == P((3, 2, 1))
    assert move_up(P((3, 2)), MoveUp(1, 2, 2)) == P((5,))
    with pytest.raises(ValueError):
        move_up(P((3, 2)), MoveUp(1, 2, 3))
    assert moving_up_set(P((1, 1, 1))) == {P((2, 1))}
    assert moving_up_set(P((2, 1))) == {P((3,))}
    assert moving_down_set(P((2,))) == {P((1, 1))}


def test_filtrations():
    (f,) = enumerate_filtrations(P((2, 1)), P((2, 1)))
    assert len(f) == 0
    (g,) = enumerate_filtrations(P((1, 1, 1)), P((3,)))
    assert g.steps == (P((1, 1, 1)), P((2, 1)), P((3,)))
    assert enumerate_filtrations(P((3,)), P((2, 1))) == ()


@pytest.mark.parametrize("n", range(1, 8))
def test_filtration_lengths_bounded(n):
    order = revlex_order(n)
    for mu in order:
        for la in order:
            for f in enumerate_filtrations(mu, la):
                assert len(f) < len(order)
                assert all(dominance_lt(a, b) for a, b in zip(f.steps, f.steps[1:]))
