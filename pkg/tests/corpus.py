"""Seeded random code collections shared by several test modules."""
from __future__ import annotations

import numpy as np

from zpkcodes.additive import MixedAlphabet, random_code

SEED = 20240601
PAIRS_3 = ((2, 2), (2, 3), (3, 2))


def two_block_codes(p, k, count=100, seed=SEED):
    """alpha in [0, 3], beta in [1, 2], a random number of random generators."""
    rng = np.random.default_rng([seed, p, k])
    out = []
    for _ in range(count):
        alpha = int(rng.integers(0, 4))
        beta = int(rng.integers(1, 3))
        out.append(random_code(MixedAlphabet.two_block(p, k, alpha, beta), rng))
    return out


def mixed_codes(count=50, seed=SEED):
    """Codes in Z_2^a1 x Z_4^a2 x Z_8^a3 with every a_i <= 2 (not all zero)."""
    rng = np.random.default_rng([seed, 248])
    out = []
    while len(out) < count:
        alphas = tuple(int(x) for x in rng.integers(0, 3, size=3))
        if not any(alphas):
            continue
        out.append(random_code(MixedAlphabet(2, alphas), rng))
    return out


def small_space_codes(count=200, limit=4096, seed=SEED):
    """Random codes over mixed alphabets whose ambient space has at most `limit` words."""
    rng = np.random.default_rng([seed, 4096])
    out = []
    while len(out) < count:
        p = int(rng.choice([2, 3]))
        k = int(rng.integers(1, 4))
        alphas = tuple(int(x) for x in rng.integers(0, 3, size=k))
        if not any(alphas):
            continue
        a = MixedAlphabet(p, alphas)
        if a.space_size > limit:
            continue
        out.append(random_code(a, rng))
    return out
