import pytest
from hypothesis import given
import hypothesis.strategies as st

from simpair import ALEPH0, ALEPH1, CONTINUUM, ZERO, Cardinal, fin
from simpair.cardinal import as_cardinal, cardinal_sum

cards = st.one_of(
    st.integers(0, 100).map(fin),
    st.sampled_from([ALEPH0, ALEPH1, CONTINUUM]),
)


def test_finite_order_matches_integers():
    assert fin(2) < fin(5)
    assert not fin(5) < fin(5)
    assert fin(5) <= fin(5)


def test_infinite_ladder():
    assert fin(10**9) < ALEPH0 < ALEPH1 < CONTINUUM


def test_addition_below_aleph0_is_integer_addition():
    assert fin(3) + fin(4) == fin(7)
    assert ZERO + fin(9) == fin(9)


def test_addition_saturates_at_infinities():
    assert fin(17) + ALEPH0 == ALEPH0
    assert ALEPH0 + ALEPH1 == ALEPH1
    assert CONTINUUM + fin(1) == CONTINUUM
    assert ALEPH0 + ALEPH0 == ALEPH0


def test_rejects_negatives_and_bools():
    with pytest.raises(ValueError):
        fin(-1)
    with pytest.raises(TypeError):
        as_cardinal(True)
    with pytest.raises(TypeError):
        as_cardinal("3")


def test_cardinal_sum():
    assert cardinal_sum([fin(1), 2, fin(3)]) == fin(6)
    assert cardinal_sum([]) == ZERO
    assert cardinal_sum([fin(1), ALEPH0]) == ALEPH0


@given(cards, cards)
def test_total_order(a, b):
    assert (a < b) + (b < a) + (a == b) == 1


@given(cards, cards)
def test_addition_commutes(a, b):
    assert a + b == b + a


@given(cards, cards, cards)
def test_addition_associates(a, b, c):
    assert (a + b) + c == a + (b + c)


@given(cards, cards, cards)
def test_addition_monotone(a, b, c):
    if a <= b:
        assert a + c <= b + c
