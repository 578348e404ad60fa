"""The two-weight code P, its dual D with labeled cosets, and the maps phi / varphi.

For a fixed (p, k) the generator matrix of P is A = (all-ones ; B) where
column j of B holds the base-p digits of j, least significant digit in the
last row.  Codeword c_x is built from the digits of x so that
c_{x + j p^{k-1}} - c_x = (j, ..., j).  The coset of D with syndrome
s = A u gets label sum_t s_t p^t; its coordinate sum is then x mod p.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import chainlin, kernels
from .additive import AdditiveCode, MixedAlphabet, MixedWord
from .errors import check_budget
from .metrics import symbol_weight
from .zring import PrimePower


@dataclass(frozen=True, eq=False)
class GrayTables:
    ring: PrimePower
    A: np.ndarray = field(repr=False)
    codewords: np.ndarray = field(repr=False)
    D_generators: np.ndarray = field(repr=False)
    coset_reps: np.ndarray = field(repr=False)

    @property
    def p(self):
        return self.ring.p

    @property
    def k(self):
        return self.ring.k

    @property
    def length(self):
        return self.ring.p ** (self.ring.k - 1)

    @property
    def D_size(self):
        return self.p ** (self.length - self.k)

    def syndrome(self, u) -> np.ndarray:
        return (self.A @ np.asarray(u, dtype=np.int64).T % self.p).T

    def label_of(self, u) -> int:
        s = self.syndrome(u)
        return int(sum(int(v) * self.p**t for t, v in enumerate(s)))

    def labels(self, words) -> np.ndarray:
        s = self.syndrome(words)
        return s @ (self.p ** np.arange(self.k))

    def D_words(self, budget: int | None = None) -> np.ndarray:
        check_budget("coset enumeration", self.D_size, budget)
        if self.D_generators.shape[0] == 0:
            return np.zeros((1, self.length), dtype=np.int64)
        words, _ = chainlin.span(chainlin.RingMatrix(PrimePower(self.p, 1), self.D_generators), budget)
        return words

    def coset(self, label: int, budget: int | None = None) -> np.ndarray:
        """All words of D_label, sorted lexicographically."""
        words = (self.D_words(budget) + self.coset_reps[label]) % self.p
        return words[np.lexsort(words.T[::-1])]


def _column_index(b, p):
    """Column of B holding the vector b (rows 1..k-1 of A)."""
    j = 0
    for digit in b:
        j = j * p + int(digit)
    return j


@lru_cache(maxsize=None)
def build_gray_tables(p: int, k: int) -> GrayTables:
    ring = PrimePower(p, k)
    m = p ** (k - 1)
    cols = np.arange(m)
    A = np.zeros((k, m), dtype=np.int64)
    A[0] = 1
    for t in range(1, k):
        A[t] = (cols // p ** (k - 1 - t)) % p

    q = p**k
    idx = np.arange(q)
    digits = np.stack([(idx // p**t) % p for t in range(k)], axis=1)
    # c_x = x_{k-1} * ones + sum_{t<k-1} x_t * A[t+1]
    coeff = np.concatenate([digits[:, k - 1 : k], digits[:, : k - 1]], axis=1)
    codewords = coeff @ A % p

    field_ring = PrimePower(p, 1)
    Dgen = chainlin.kernel(chainlin.RingMatrix(field_ring, A))
    rref, pivots = chainlin.row_echelon(Dgen, hermite=True)
    rref_rows = rref.entries

    reps = np.zeros((q, m), dtype=np.int64)
    for label in range(q):
        s = [(label // p**t) % p for t in range(k)]
        u = np.zeros(m, dtype=np.int64)
        if s[0]:
            inv = pow(s[0], -1, p)
            u[_column_index([v * inv % p for v in s[1:]], p)] = s[0]
        elif any(s):
            u[_column_index(s[1:], p)] += 1
            u[0] += p - 1
        u %= p
        # lex-smallest coset element: clear every pivot column of D's reduced basis
        for pv in pivots:
            u = (u - u[pv.col] * rref_rows[pv.row]) % p
        reps[label] = u

    for arr in (A, codewords, rref_rows, reps):
        arr.setflags(write=False)
    return GrayTables(ring, A, codewords, rref_rows, reps)


def phi_words(alphabet: MixedAlphabet, words) -> np.ndarray:
    """phi applied row by row to a flat word array."""
    words = np.asarray(words, dtype=np.int64).reshape(-1, alphabet.length)
    parts = []
    for j, i in enumerate(alphabet.exponents):
        parts.append(build_gray_tables(alphabet.p, int(i)).codewords[words[:, j]])
    if not parts:
        return np.zeros((words.shape[0], 0), dtype=np.int64)
    return np.concatenate(parts, axis=1)


def phi_map(x: MixedWord) -> tuple[int, ...]:
    """Blockwise substitution x_j -> c_{x_j}; Z_p symbols pass through unchanged."""
    return tuple(int(v) for v in phi_words(x.alphabet, [x.flat])[0])


def varphi_size(code: AdditiveCode) -> int:
    """|varphi(C)| = |C| * prod_i |D^{(i)}|^{a_i}."""
    a = code.alphabet
    size = code.size
    for i, alpha in enumerate(a.alphas, start=1):
        size *= (a.p ** (a.p ** (i - 1) - i)) ** alpha
    return size


def varphi_image(code: AdditiveCode, budget: int | None = None) -> np.ndarray:
    """Every word of the union of coset products D_{x_1} x ... x D_{x_n} over the code."""
    a = code.alphabet
    check_budget("varphi image", varphi_size(code), budget)
    words = code.words(budget)
    cur = np.zeros((words.shape[0], 1, 0), dtype=np.int64)
    cosets = {}
    for j, i in enumerate(a.exponents):
        i = int(i)
        if i not in cosets:
            t = build_gray_tables(a.p, i)
            cosets[i] = np.stack([t.coset(x) for x in range(a.p**i)])
        opts = cosets[i][words[:, j]]                      # (N, |D|, m)
        n_cur, n_opt = cur.shape[1], opts.shape[1]
        left = np.repeat(cur, n_opt, axis=1)
        right = np.tile(opts, (1, n_cur, 1))
        cur = np.concatenate([left, right], axis=2)
    return cur.reshape(-1, a.image_length)


def weight_of(x: MixedWord, metric: str) -> int:
    a = x.alphabet
    return sum(symbol_weight(v, a.p, int(i), metric) for v, i in zip(x.flat, a.exponents))


def format_tables(t: GrayTables) -> str:
    """Text dump: the ordered codewords of P, then one representative per labeled coset."""
    lines = [f"# P for p={t.p}, k={t.k}: {t.p**t.k} codewords of length {t.length}"]
    lines += [f"c_{i}: {''.join(map(str, row))}" for i, row in enumerate(t.codewords)]
    lines.append(f"# cosets of D (|D| = {t.D_size}), lexicographically smallest representative")
    lines += [f"D_{i}: {''.join(map(str, row))}" for i, row in enumerate(t.coset_reps)]
    return "\n".join(lines)


@lru_cache(maxsize=None)
def coset_min_weights(p: int, k: int) -> tuple[int, ...]:
    """Minimum Hamming weight of each labeled coset D_0, ..., D_{p^k-1}."""
    t = build_gray_tables(p, k)
    return tuple(int((t.coset(x) != 0).sum(axis=1).min()) for x in range(p**k))


def D_min_distance(p: int, k: int) -> int | None:
    """Minimum distance of D, or None when D = {0}."""
    words = build_gray_tables(p, k).D_words()
    w = (words != 0).sum(axis=1)
    w = w[w > 0]
    return int(w.min()) if w.size else None


def varphi_min_distance(code: AdditiveCode, budget: int | None = None) -> int | None:
    """Minimum distance of varphi(C) from its coset-product structure.

    Words inside one product differ by a nonzero element of a product of
    copies of D; words from codewords c != c' differ by an element of the
    coset product labeled c - c', whose lightest word has weight
    sum_j minweight(D_{(c - c')_j}).  Returns None for a one-word image.
    """
    a = code.alphabet
    cands = []
    for i, alpha in enumerate(a.alphas, start=1):
        if alpha:
            d = D_min_distance(a.p, i)
            if d is not None:
                cands.append(d)
    words = code.words(budget)
    if words.shape[0] > 1:
        table = np.zeros((a.length, int(a.moduli.max())), dtype=np.int64)
        for j, i in enumerate(a.exponents):
            mw = coset_min_weights(a.p, int(i))
            table[j, : len(mw)] = mw
        w = kernels.weight_sum(words, table)
        cands.append(int(w[w > 0].min()))
    return min(cands) if cands else None
