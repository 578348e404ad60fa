import pytest
from hypothesis import given, strategies as st

from zpkcodes.errors import InvalidInput
from zpkcodes.zring import (PrimePower, Residue, additive_order, base_p_digits, from_digits, is_prime,
                            order_of, unit_inverse, valuation)

rings = st.sampled_from([PrimePower(2, 1), PrimePower(2, 3), PrimePower(3, 2), PrimePower(5, 2)])


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_ring_rejects_composite():
    with pytest.raises(InvalidInput):
        PrimePower(4, 2)


@pytest.mark.parametrize("value,expected", [(0, 3), (1, 0), (2, 1), (4, 2), (6, 1), (3, 0)])
def test_valuation_z8(value, expected):
    assert valuation(value, 2, 3) == expected


def test_orders_z27():
    assert [order_of(v, 3, 3) for v in (0, 1, 3, 9, 18)] == [1, 27, 9, 3, 3]


def test_digits_example():
    r = PrimePower(3, 3)
    assert base_p_digits(r.residue(23)) == (2, 1, 2)
    assert from_digits((2, 1, 2), r).value == 23
    with pytest.raises(InvalidInput):
        from_digits((3, 0, 0), r)


@given(rings, st.data())
def test_digit_roundtrip(ring, data):
    v = data.draw(st.integers(0, ring.modulus - 1))
    x = ring.residue(v)
    assert from_digits(base_p_digits(x), ring) == x


@given(rings, st.data())
def test_order_is_modulus_over_p_to_valuation(ring, data):
    v = data.draw(st.integers(0, ring.modulus - 1))
    x = ring.residue(v)
    assert additive_order(x) == ring.modulus // ring.p ** valuation(v, ring.p, ring.k)
    assert (additive_order(x) * v) % ring.modulus == 0


@given(rings, st.data())
def test_unit_inverse(ring, data):
    v = data.draw(st.integers(1, ring.modulus - 1).filter(lambda t: t % ring.p))
    assert (v * unit_inverse(v, ring.modulus)) % ring.modulus == 1
    assert Residue(v, ring).is_unit


def test_residue_arithmetic():
    r = PrimePower(2, 2)
    a, b = r.residue(3), r.residue(2)
    assert (a + b).value == 1 and (a * b).value == 2 and (-a).value == 1 and (a - b).value == 1
    with pytest.raises(InvalidInput):
        Residue(4, r)
