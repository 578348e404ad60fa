"""Numpy implementations of the hot kernels.

Same signatures as the compiled ``_ckernels`` module; used when the
extension is not built or when ``ZPKCODES_PURE_PYTHON`` is set.
"""
import numpy as np


def span_words(rows, bounds, moduli):
    """All combinations sum_j c_j * rows[j] (mod moduli) with 0 <= c_j < bounds[j].

    Row 0's coefficient varies slowest, so the output is lexicographic in
    the coefficient tuple.
    """
    rows = np.asarray(rows, dtype=np.int64)
    bounds = np.asarray(bounds, dtype=np.int64)
    moduli = np.asarray(moduli, dtype=np.int64)
    n = moduli.shape[0]
    if rows.shape[0] == 0:
        return np.zeros((1, n), dtype=np.int64)
    total = int(np.prod(bounds))
    coeffs = np.stack(np.unravel_index(np.arange(total), tuple(bounds)), axis=1)
    return (coeffs @ rows) % moduli


def weight_sum(words, table):
    """Row sums of ``table[j, words[i, j]]``."""
    words = np.asarray(words, dtype=np.int64)
    table = np.asarray(table, dtype=np.int64)
    if words.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    cols = np.arange(words.shape[1])
    return table[cols, words].sum(axis=1).astype(np.int64)


def cover_counts(codewords, errors, moduli):
    """How many (codeword, error) pairs land on each word of the space.

    Words are indexed in mixed radix with the first coordinate most significant.
    """
    codewords = np.asarray(codewords, dtype=np.int64)
    errors = np.asarray(errors, dtype=np.int64)
    moduli = np.asarray(moduli, dtype=np.int64)
    space = int(np.prod(moduli))
    if codewords.shape[0] == 0 or errors.shape[0] == 0:
        return np.zeros(space, dtype=np.int64)
    hits = (codewords[:, None, :] + errors[None, :, :]) % moduli
    hits = hits.reshape(-1, moduli.shape[0])
    idx = np.ravel_multi_index(tuple(hits.T), tuple(moduli))
    return np.bincount(idx, minlength=space).astype(np.int64)


def syndromes(words, checks, scale, modulus):
    """Matrix of inner products sum_j scale[j]*checks[r, j]*words[i, j] mod modulus."""
    words = np.asarray(words, dtype=np.int64)
    checks = np.asarray(checks, dtype=np.int64)
    scale = np.asarray(scale, dtype=np.int64)
    if checks.shape[0] == 0:
        return np.zeros((words.shape[0], 0), dtype=np.int64)
    return ((words * scale) % modulus) @ checks.T % modulus
