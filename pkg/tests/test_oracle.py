import pytest

from zpkcodes import oracle
from zpkcodes.additive import AdditiveCode, MixedAlphabet
from zpkcodes.errors import BudgetExceeded


def test_closure_is_additive_span():
    a = MixedAlphabet.two_block(2, 2, 1, 1)
    assert oracle.closure(a, [[1, 1]]) == {(0, 0), (1, 1), (0, 2), (1, 3)}


def test_brute_dual_example():
    a = MixedAlphabet.two_block(2, 2, 1, 1)
    assert oracle.brute_dual(AdditiveCode(a, [[1, 1]])) == {(0, 0), (1, 2)}


def test_brute_dual_budget():
    a = MixedAlphabet(3, (0, 0, 5))
    with pytest.raises(BudgetExceeded):
        oracle.brute_dual(AdditiveCode(a, [[1] * 5]), budget=1000)


def test_brute_min_distance():
    assert oracle.brute_min_distance([(0, 0, 0), (1, 1, 0), (1, 1, 1)]) == 1
    assert oracle.brute_min_distance([(0, 0)]) is None


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_census_shape(p, k):
    classes = oracle.coset_distribution_census(p, k)
    assert sorted(c.min_weight for c in classes) == [0, 1, 2]
    sizes = {c.min_weight: c.cosets for c in classes}
    assert sizes == {0: 1, 1: p**k - p ** (k - 1), 2: p ** (k - 1) - 1}
