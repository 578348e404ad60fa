import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from zpkcodes import oracle
from zpkcodes.additive import AdditiveCode, MixedAlphabet, random_code
from zpkcodes.errors import NonIntegralDivision
from zpkcodes.gray import build_gray_tables
from zpkcodes.wenum import (COSET_CLASSES, BiPoly, complete_enumerator, coset_enumerator_closed,
                            coset_transform_closed, dual_image_enumerator, duality_check, hamming_enumerator,
                            image_enumerator_phi, image_enumerator_varphi, macwilliams_transform, sw_polynomial)

X, Y = BiPoly.X(), BiPoly.Y()
Z2Z4 = MixedAlphabet.two_block(2, 2, 1, 1)


def test_text_form():
    W = hamming_enumerator(build_gray_tables(3, 3).codewords)
    assert W.to_text() == "X^9 + 24*X^3*Y^6 + 2*Y^9"
    assert (X**3 - 3 * X * Y**2).to_text() == "X^3 - 3*X*Y^2"
    assert BiPoly(2).to_text() == "0"


@pytest.mark.parametrize("text", ["X^9 + 24*X^3*Y^6 + 2*Y^9", "X^3 - 3*X*Y^2", "Y", "7*X^2*Y^5"])
def test_parse_roundtrip(text):
    assert BiPoly.parse(text).to_text() == text


def test_exact_division():
    with pytest.raises(NonIntegralDivision):
        (X + Y).exact_div(2)
    assert (2 * X + 4 * Y).exact_div(2) == X + 2 * Y


def test_macwilliams_small():
    # {000, 111}, transformed with divisor 2
    W = X**3 + Y**3
    assert macwilliams_transform(W, 2, 2) == X**3 + 3 * X * Y**2


def test_sw_example():
    c = AdditiveCode(Z2Z4, [[1, 1]])
    assert sw_polynomial(c).to_text() == "X*Y + X*T + 2*S*Z"


def test_duality_example():
    r = duality_check(AdditiveCode(Z2Z4, [[1, 1]]))
    assert r.equal and r.left.to_text() == "X^3 + 3*X*Y^2"


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (3, 2), (3, 3)])
@pytest.mark.parametrize("cls", COSET_CLASSES)
def test_closed_coset_forms(p, k, cls):
    t = build_gray_tables(p, k)
    label = {"zero": 0, "unit": 1, "divisible": p}[cls]
    scanned = hamming_enumerator(t.coset(label))
    assert coset_enumerator_closed(p, k, cls) == scanned
    transformed = scanned.substitute(X + (p - 1) * Y, X - Y)
    assert transformed == coset_transform_closed(p, k, cls) * t.D_size


def test_closed_forms_z4():
    assert [coset_enumerator_closed(2, 2, c) for c in COSET_CLASSES] == [X**2, X * Y, Y**2]


alphabets = st.sampled_from([MixedAlphabet(2, (1, 1)), MixedAlphabet(3, (2, 1)), MixedAlphabet(2, (1, 0, 1)),
                             MixedAlphabet(2, (1, 1, 1)), MixedAlphabet(3, (0, 2))])


@settings(max_examples=40, deadline=None)
@given(alphabets, st.integers(0, 2**32 - 1))
def test_enumerators_against_oracle(a, seed):
    c = random_code(a, np.random.default_rng(seed))
    assert image_enumerator_phi(c) == oracle.brute_image_enumerator(c, "phi")
    assert image_enumerator_varphi(c) == oracle.brute_image_enumerator(c, "varphi")
    assert dual_image_enumerator(c) == oracle.brute_image_enumerator(c.dual(), "phi")
    assert duality_check(c).equal


@settings(max_examples=40, deadline=None)
@given(alphabets, st.integers(0, 2**32 - 1))
def test_enumerator_totals_and_collapse(a, seed):
    c = random_code(a, np.random.default_rng(seed))
    sw = sw_polynomial(c)
    assert sw.total() == c.size
    assert complete_enumerator(c).collapse() == sw
    W = hamming_enumerator(c.words())
    assert W.total() == c.size


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.lists(st.integers(0, 20), min_size=1, max_size=6))
def test_macwilliams_involution(p, coeffs):
    W = BiPoly(len(coeffs) - 1, coeffs)
    n = W.degree
    assert macwilliams_transform(macwilliams_transform(W, p), p, p**n) == W
