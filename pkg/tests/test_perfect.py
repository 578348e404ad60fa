import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from zpkcodes.codefile import read_document
from zpkcodes.errors import InvalidInput
from zpkcodes.perfect import (StructuredCheckMatrix, build_perfect_check, canonical_column,
                              dual_one_weight_check, is_one_perfect, perfect_params, validate_check_matrix,
                              verify_perfect_exhaustive, verify_perfect_syndrome, weight_one_errors)

SMALL = [(2, (1,)), (2, (1, 1)), (2, (0, 1)), (3, (1,)), (3, (0, 1)), (2, (2,)), (2, (0, 0, 1))]


def test_params_example():
    prof = perfect_params(3, (1, 0, 1))
    assert prof.alphas == (4, 3, 3)
    assert prof.ball_size == 81 and prof.gamma == 4


@pytest.mark.parametrize("p,gammas,alphas", [(2, (1, 1), (3, 2)), (3, (0, 1), (1, 1)), (2, (3,), (7,)),
                                             (2, (0, 1), (1, 1)), (3, (2,), (4,))])
def test_params_small(p, gammas, alphas):
    prof = perfect_params(p, gammas)
    assert prof.alphas == alphas
    assert prof.code_size * prof.ball_size == prof.space_size


def test_params_rejects_bad_input():
    with pytest.raises(InvalidInput):
        perfect_params(4, (1,))
    with pytest.raises(InvalidInput):
        perfect_params(2, (1, 0))


@pytest.mark.parametrize("p,gammas", SMALL + [(3, (1, 0, 1)), (2, (1, 1, 1)), (5, (0, 1))])
def test_built_matrix_is_valid_and_perfect(p, gammas):
    M = build_perfect_check(p, gammas)
    assert validate_check_matrix(M).valid
    assert verify_perfect_syndrome(M)
    assert M.gammas == tuple(gammas)


@pytest.mark.parametrize("p,gammas", SMALL)
def test_exhaustive_agrees(p, gammas):
    M = build_perfect_check(p, gammas)
    c = M.code()
    assert c.size == perfect_params(p, gammas).code_size
    assert verify_perfect_exhaustive(c)


def test_example_fixture(fixtures):
    M = read_document(fixtures / "example44.code").check_matrix()
    assert M.rows.shape == (2, 10) and M.alphas == (4, 3, 3)
    assert validate_check_matrix(M).valid
    assert verify_perfect_syndrome(M)


def test_validation_catches_collinear_columns():
    M = build_perfect_check(3, (1, 0, 1))
    rows = M.rows.copy()
    rows[:, 1] = (2 * rows[:, 0]) % 3
    bad = StructuredCheckMatrix(3, M.alphas, rows, M.row_orders)
    report = validate_check_matrix(bad)
    assert not report.valid and not report
    assert not verify_perfect_syndrome(bad)


def test_validation_catches_wrong_order():
    M = build_perfect_check(2, (1, 1))
    bad = StructuredCheckMatrix(2, M.alphas, M.rows, tuple(reversed(M.row_orders)))
    assert not validate_check_matrix(bad).valid


def test_canonical_column():
    assert canonical_column((2, 4), 3, 2) == (1, 2)
    assert canonical_column((0, 3), 2, 2) == (0, 1)


def test_weight_one_errors_count():
    M = build_perfect_check(3, (1, 0, 1))
    assert weight_one_errors(M.alphabet).shape[0] == 81


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(SMALL), st.integers(0, 2**32 - 1))
def test_monomial_equivalence_preserves_perfection(case, seed):
    p, gammas = case
    M = build_perfect_check(p, gammas)
    rng = np.random.default_rng(seed)
    rows = M.rows.copy()
    a = M.alphabet
    for sl, i in zip(a.block_slices(), range(1, a.k + 1)):
        idx = np.arange(sl.start, sl.stop)
        rows[:, idx] = rows[:, rng.permutation(idx)]
        units = [u for u in range(1, p**i) if u % p]
        for j in idx:
            rows[:, j] = (rows[:, j] * int(rng.choice(units))) % p**i
    N = StructuredCheckMatrix(p, M.alphas, rows, M.row_orders)
    assert validate_check_matrix(N).valid
    assert verify_perfect_syndrome(N)
    assert verify_perfect_exhaustive(N.code())


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(SMALL), st.integers(0, 2**32 - 1))
def test_duplicated_column_breaks_both_checks(case, seed):
    p, gammas = case
    M = build_perfect_check(p, gammas)
    rng = np.random.default_rng(seed)
    a = M.alphabet
    sl = [s for s in a.block_slices() if s.stop - s.start >= 2]
    if not sl:
        return
    s = sl[int(rng.integers(0, len(sl)))]
    rows = M.rows.copy()
    rows[:, s.start + 1] = rows[:, s.start]
    N = StructuredCheckMatrix(p, M.alphas, rows, M.row_orders)
    assert not verify_perfect_syndrome(N)
    assert not is_one_perfect(a, N.code().words())


@pytest.mark.parametrize("p,gammas,weight,params", [(2, (1, 1), 4, (7, 16, 3)), (3, (0, 1), 3, (4, 9, 3))])
def test_dual_one_weight(p, gammas, weight, params):
    r = dual_one_weight_check(build_perfect_check(p, gammas))
    assert r.weights == {weight}
    assert r.hamming_params == params == r.expected_params
    assert r.ok
