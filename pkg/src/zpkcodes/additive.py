"""Additive codes over the mixed alphabet Z_p^{a_1} x Z_{p^2}^{a_2} x ... x Z_{p^k}^{a_k}.

Linear algebra is done after embedding block i into Z_{p^k} by the factor
p^{k-i}.  Under that embedding the mixed inner product becomes the
ordinary dot product mod p^k against any lift of the second argument, so
duals, sizes and spans all come from :mod:`zpkcodes.chainlin`.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import chainlin, kernels
from .errors import InvalidInput, check_budget
from .metrics import METRICS, weight_table
from .zring import PrimePower, Residue


@dataclass(frozen=True)
class MixedAlphabet:
    """The space Z_p^{alphas[0]} x Z_{p^2}^{alphas[1]} x ... x Z_{p^k}^{alphas[k-1]}."""

    p: int
    alphas: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(int(a) for a in self.alphas))
        PrimePower(self.p, max(1, len(self.alphas)))
        if not self.alphas or any(a < 0 for a in self.alphas) or not any(self.alphas):
            raise InvalidInput(f"block lengths {self.alphas} must be >= 0 with at least one positive")

    @classmethod
    def two_block(cls, p: int, k: int, alpha: int, beta: int) -> MixedAlphabet:
        """Z_p^alpha x Z_{p^k}^beta."""
        if k < 2:
            raise InvalidInput("two-block alphabets need k >= 2")
        return cls(p, (alpha,) + (0,) * (k - 2) + (beta,))

    @property
    def k(self) -> int:
        return len(self.alphas)

    @property
    def ring(self) -> PrimePower:
        return PrimePower(self.p, self.k)

    @property
    def length(self) -> int:
        return sum(self.alphas)

    @cached_property
    def exponents(self) -> np.ndarray:
        return np.repeat(np.arange(1, self.k + 1), self.alphas).astype(np.int64)

    @cached_property
    def moduli(self) -> np.ndarray:
        return (self.p ** self.exponents).astype(np.int64)

    @cached_property
    def scale(self) -> np.ndarray:
        return (self.p ** (self.k - self.exponents)).astype(np.int64)

    @property
    def space_size(self) -> int:
        return self.p ** sum((i + 1) * a for i, a in enumerate(self.alphas))

    @property
    def image_length(self) -> int:
        """Length over Z_p of the Gray images: sum_i a_i p^{i-1}."""
        return sum(a * self.p**i for i, a in enumerate(self.alphas))

    def block_slices(self):
        out, start = [], 0
        for a in self.alphas:
            out.append(slice(start, start + a))
            start += a
        return out

    def check_flat(self, flat) -> np.ndarray:
        arr = np.asarray(flat, dtype=np.int64)
        if arr.shape[-1:] != (self.length,):
            raise InvalidInput(f"word length {arr.shape[-1] if arr.ndim else 0} != {self.length}")
        if ((arr < 0) | (arr >= self.moduli)).any():
            raise InvalidInput("entry outside its block's residue range")
        return arr

    def word(self, flat) -> MixedWord:
        flat = self.check_flat(flat)
        return MixedWord(self, tuple(tuple(int(x) for x in flat[s]) for s in self.block_slices()))

    def zero(self) -> MixedWord:
        return self.word([0] * self.length)

    def parse_word(self, text: str) -> MixedWord:
        """Parse ``"(1,0|3)"``; one ``|``-separated group per nonempty block."""
        body = text.strip().strip("()")
        groups = body.split("|")
        nonempty = [i for i, a in enumerate(self.alphas) if a]
        if len(groups) != len(nonempty):
            raise InvalidInput(f"expected {len(nonempty)} blocks in {text!r}")
        flat = []
        for g, i in zip(groups, nonempty):
            try:
                part = [int(t) for t in g.replace(" ", ",").split(",") if t]
            except ValueError:
                raise InvalidInput(f"non-integer entry in {text!r}") from None
            if len(part) != self.alphas[i]:
                raise InvalidInput(f"block {i + 1} of {text!r} needs {self.alphas[i]} entries")
            flat.extend(part)
        return self.word(flat)

    def all_words(self, budget: int | None = None) -> np.ndarray:
        check_budget("space enumeration", self.space_size, budget)
        if self.length == 0:
            return np.zeros((1, 0), dtype=np.int64)
        grids = np.indices(tuple(int(m) for m in self.moduli)).reshape(self.length, -1)
        return grids.T.astype(np.int64)

    def __str__(self):
        parts = [f"Z_{self.p**(i + 1)}^{a}" for i, a in enumerate(self.alphas) if a]
        return " x ".join(parts)


@dataclass(frozen=True)
class MixedWord:
    alphabet: MixedAlphabet
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        a = self.alphabet
        if len(self.blocks) != a.k or any(len(b) != n for b, n in zip(self.blocks, a.alphas)):
            raise InvalidInput("block shape does not match alphabet")
        for i, b in enumerate(self.blocks):
            if any(not 0 <= x < a.p ** (i + 1) for x in b):
                raise InvalidInput(f"block {i + 1} entries must lie in [0, {a.p ** (i + 1)})")

    @property
    def flat(self) -> tuple[int, ...]:
        return tuple(x for b in self.blocks for x in b)

    def _combine(self, other, sign):
        if other.alphabet != self.alphabet:
            raise InvalidInput("alphabet mismatch")
        a = np.array(self.flat) + sign * np.array(other.flat)
        return self.alphabet.word(a % self.alphabet.moduli)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.alphabet.word((-np.array(self.flat)) % self.alphabet.moduli)

    def __str__(self):
        return "(" + "|".join(",".join(map(str, b)) for b in self.blocks if b) + ")"


def scalar_mul(l, c: MixedWord) -> MixedWord:
    """Module action: block i is multiplied by l mod p^i."""
    l = int(l)
    a = c.alphabet
    return a.word(l * np.array(c.flat, dtype=np.int64) % a.moduli)


def inner_product(x: MixedWord, y: MixedWord) -> Residue:
    """sum_i p^{k-i} <x_i, y_i> in Z_{p^k}."""
    if x.alphabet != y.alphabet:
        raise InvalidInput("alphabet mismatch")
    a = x.alphabet
    q = a.ring.modulus
    total = 0
    for i, (bx, by) in enumerate(zip(x.blocks, y.blocks)):
        dot = sum(u * v for u, v in zip(bx, by)) % a.p ** (i + 1)
        total += a.p ** (a.k - i - 1) * dot
    return Residue(total % q, a.ring)


class AdditiveCode:
    """A Z_{p^k}-submodule of a mixed alphabet, given by generator rows."""

    def __init__(self, alphabet: MixedAlphabet, generators):
        self.alphabet = alphabet
        g = np.asarray(generators, dtype=np.int64).reshape(-1, alphabet.length)
        self.generators = alphabet.check_flat(g) if g.size else g
        self.generators.setflags(write=False)

    def __repr__(self):
        return f"AdditiveCode({self.alphabet}, size={self.size})"

    @cached_property
    def _echelon(self):
        emb = chainlin.RingMatrix(self.alphabet.ring, self.generators * self.alphabet.scale)
        return chainlin.row_echelon(emb)

    @property
    def echelon_generators(self) -> np.ndarray:
        """Generators in echelon form, back in the mixed alphabet."""
        e, _ = self._echelon
        return e.entries // self.alphabet.scale

    @cached_property
    def size(self) -> int:
        a = self.alphabet
        size = 1
        for pv in self._echelon[1]:
            size *= a.p ** (a.k - pv.valuation)
        return size

    def words(self, budget: int | None = None) -> np.ndarray:
        """Every codeword exactly once, as rows of a flat integer array."""
        a = self.alphabet
        e, pivots = self._echelon
        check_budget("code enumeration", self.size, budget)
        bounds = np.array([a.p ** (a.k - pv.valuation) for pv in pivots], dtype=np.int64)
        emb = kernels.span_words(e.entries.reshape(len(pivots), a.length), bounds,
                                 np.full(a.length, a.ring.modulus, dtype=np.int64))
        return emb // a.scale

    def codewords(self, budget: int | None = None):
        return [self.alphabet.word(w) for w in self.words(budget)]

    @cached_property
    def _dual_generators(self) -> np.ndarray:
        a = self.alphabet
        emb = chainlin.RingMatrix(a.ring, self.generators * a.scale)
        ker = chainlin.kernel(emb)
        return ker.entries % a.moduli

    def dual(self) -> AdditiveCode:
        return AdditiveCode(self.alphabet, self._dual_generators)

    def contains(self, word) -> bool:
        flat = word.flat if isinstance(word, MixedWord) else word
        w = self.alphabet.check_flat(flat)
        a = self.alphabet
        h = self._dual_generators
        if h.shape[0] == 0:
            return True
        s = kernels.syndromes(w.reshape(1, -1), h, a.scale, a.ring.modulus)
        return not s.any()

    def same_code(self, other: AdditiveCode) -> bool:
        return (self.alphabet == other.alphabet and self.size == other.size
                and all(self.contains(g) for g in other.generators))

    def is_trivial(self) -> bool:
        return self.size == 1


def code_from_generators(alphabet: MixedAlphabet, rows) -> AdditiveCode:
    return AdditiveCode(alphabet, rows)


def code_from_check(alphabet: MixedAlphabet, check_rows) -> AdditiveCode:
    """The code {u : <r, u> = 0 for every check row r}."""
    return AdditiveCode(alphabet, check_rows).dual()


def dual(code: AdditiveCode) -> AdditiveCode:
    return code.dual()


def weights(code: AdditiveCode, metric: str, budget: int | None = None) -> np.ndarray:
    """Metric weight of every codeword, in enumeration order."""
    if metric not in METRICS:
        raise InvalidInput(f"unknown metric {metric!r}")
    table = weight_table(code.alphabet.p, code.alphabet.exponents, metric)
    return kernels.weight_sum(code.words(budget), table)


def min_distance(code: AdditiveCode, metric: str = "hamming", budget: int | None = None) -> int:
    """Minimum metric weight over nonzero codewords (exhaustive)."""
    if code.size < 2:
        raise InvalidInput("minimum distance of a code with fewer than two words")
    w = weights(code, metric, budget)
    return int(w[w > 0].min())


def random_code(alphabet: MixedAlphabet, rng: np.random.Generator, n_generators: int | None = None):
    """Code spanned by uniformly random rows; the row count defaults to a random value."""
    if n_generators is None:
        n_generators = int(rng.integers(0, alphabet.length + 1))
    rows = rng.integers(0, alphabet.moduli, size=(n_generators, alphabet.length))
    return AdditiveCode(alphabet, rows)
