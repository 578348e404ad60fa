"""The compiled and numpy kernels must agree exactly."""
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from zpkcodes import _kernels_py, kernels

try:
    from zpkcodes import _ckernels
except ImportError:  # pragma: no cover - extension not built
    _ckernels = None

needs_c = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")
BACKENDS = [_kernels_py] + ([_ckernels] if _ckernels is not None else [])


def test_backend_flag():
    assert kernels.BACKEND in ("cython", "python")


@pytest.mark.parametrize("mod", BACKENDS)
def test_span_words_order(mod):
    rows = np.array([[1, 0], [0, 1]], dtype=np.int64)
    out = mod.span_words(rows, np.array([2, 3], dtype=np.int64), np.array([2, 3], dtype=np.int64))
    assert out.tolist() == [[0, 0], [0, 1], [0, 2], [1, 0], [1, 1], [1, 2]]
    empty = mod.span_words(np.zeros((0, 2), dtype=np.int64), np.zeros(0, dtype=np.int64),
                           np.array([2, 3], dtype=np.int64))
    assert empty.tolist() == [[0, 0]]


@st.composite
def problems(draw):
    moduli = np.array(draw(st.lists(st.sampled_from([2, 4, 8, 3, 9]), min_size=1, max_size=4)), dtype=np.int64)
    r = draw(st.integers(0, 3))
    seed = draw(st.integers(0, 2**32 - 1))
    rng = np.random.default_rng(seed)
    rows = rng.integers(0, moduli, size=(r, moduli.size)).astype(np.int64)
    bounds = rng.integers(1, 4, size=r).astype(np.int64)
    return moduli, rows, bounds, rng


@needs_c
@settings(max_examples=80, deadline=None)
@given(problems())
def test_backends_agree(prob):
    moduli, rows, bounds, rng = prob
    a = _kernels_py.span_words(rows, bounds, moduli)
    b = _ckernels.span_words(rows, bounds, moduli)
    assert np.array_equal(np.asarray(a), np.asarray(b))
    table = rng.integers(0, 5, size=(moduli.size, int(moduli.max()))).astype(np.int64)
    assert np.array_equal(np.asarray(_kernels_py.weight_sum(a, table)), np.asarray(_ckernels.weight_sum(a, table)))
    errs = np.vstack([np.zeros(moduli.size, dtype=np.int64), np.eye(moduli.size, dtype=np.int64)])
    assert np.array_equal(np.asarray(_kernels_py.cover_counts(a, errs, moduli)),
                          np.asarray(_ckernels.cover_counts(a, errs, moduli)))
    q = int(np.lcm.reduce(moduli))
    scale = (q // moduli).astype(np.int64)
    checks = rng.integers(0, q, size=(2, moduli.size)).astype(np.int64)
    assert np.array_equal(np.asarray(_kernels_py.syndromes(a, checks, scale, q)),
                          np.asarray(_ckernels.syndromes(a, checks, scale, q)))
