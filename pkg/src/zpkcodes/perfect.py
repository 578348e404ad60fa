"""Additive 1-perfect codes in Z_p x Z_{p^2} x ... x Z_{p^k} under the diamond distance.

A check matrix has rows grouped by additive order p, p^2, ..., p^k
(gamma_1, ..., gamma_k rows).  The code it defines is 1-perfect exactly
when block i holds alpha_i pairwise non-collinear columns of order p^i.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import chainlin, kernels
from .additive import AdditiveCode, MixedAlphabet, code_from_check, code_from_generators, weights
from .errors import BudgetExceeded, InvalidInput, check_budget
from .gray import varphi_min_distance, varphi_size
from .zring import is_prime, order_of

EXHAUSTIVE_BUDGET = 1 << 20


@dataclass(frozen=True)
class PerfectProfile:
    p: int
    gammas: tuple[int, ...]
    alphas: tuple[int, ...]
    gamma: int
    ball_size: int
    space_size: int
    code_size: int

    @property
    def k(self):
        return len(self.gammas)

    @property
    def alphabet(self) -> MixedAlphabet:
        return MixedAlphabet(self.p, self.alphas)


def _alpha(p, gammas, i):
    k = len(gammas)
    tail = sum(gammas[i - 1 : k])
    prefix = 1
    for j in range(1, i):
        prefix *= p ** (j * gammas[j - 1])
    num = prefix * (p ** (i * tail) - p ** ((i - 1) * tail))
    den = p**i - p ** (i - 1)
    a, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"alpha_{i} is not integral ({num}/{den})")
    return a


def perfect_params(p: int, gammas) -> PerfectProfile:
    """Block lengths, ball size and code size of the 1-perfect code with row profile ``gammas``."""
    gammas = tuple(int(g) for g in gammas)
    if not is_prime(p):
        raise InvalidInput(f"{p} is not prime")
    if not gammas or gammas[-1] <= 0 or any(g < 0 for g in gammas):
        raise InvalidInput("gammas must be >= 0 with the last one positive")
    k = len(gammas)
    alphas = tuple(_alpha(p, gammas, i) for i in range(1, k + 1))
    gamma = sum(i * g for i, g in enumerate(gammas, start=1))
    ball = 1 + sum((p**i - p ** (i - 1)) * a for i, a in enumerate(alphas, start=1))
    space = p ** sum(i * a for i, a in enumerate(alphas, start=1))
    if ball != p**gamma or space % ball:
        raise ArithmeticError(f"ball size {ball} inconsistent with p^gamma = {p**gamma}")
    return PerfectProfile(p, gammas, alphas, gamma, ball, space, space // ball)


@dataclass(frozen=True, eq=False)
class StructuredCheckMatrix:
    """Check rows over a mixed alphabet, each with a declared additive order."""

    p: int
    alphas: tuple[int, ...]
    rows: np.ndarray = field(repr=False)
    row_orders: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(self.alphas))
        object.__setattr__(self, "row_orders", tuple(int(o) for o in self.row_orders))
        rows = np.asarray(self.rows, dtype=np.int64).reshape(-1, sum(self.alphas))
        rows = self.alphabet.check_flat(rows) if rows.size else rows
        rows.setflags(write=False)
        object.__setattr__(self, "rows", rows)
        if len(self.row_orders) != rows.shape[0]:
            raise InvalidInput(f"{rows.shape[0]} rows but {len(self.row_orders)} declared orders")

    @cached_property
    def alphabet(self) -> MixedAlphabet:
        return MixedAlphabet(self.p, self.alphas)

    @property
    def k(self):
        return len(self.alphas)

    def order_exponents(self) -> list[int]:
        out = []
        for o in self.row_orders:
            e, v = 0, o
            while v % self.p == 0 and v > 1:
                v //= self.p
                e += 1
            out.append(e if v == 1 else -1)
        return out

    @property
    def gammas(self) -> tuple[int, ...]:
        exps = self.order_exponents()
        return tuple(sum(1 for e in exps if e == i) for i in range(1, self.k + 1))

    def code(self) -> AdditiveCode:
        return code_from_check(self.alphabet, self.rows)

    def block_columns(self, i: int) -> np.ndarray:
        """Columns of block i (1-based) as rows of an array."""
        return self.rows[:, self.alphabet.block_slices()[i - 1]].T


def canonical_column(col, p: int, i: int) -> tuple[int, ...]:
    """Lexicographically smallest unit multiple of ``col`` over Z_{p^i}."""
    q = p**i
    col = np.asarray(col, dtype=np.int64)
    return min(tuple(int(v) for v in (u * col) % q) for u in range(1, q) if u % p)


@dataclass
class ValidationReport:
    problems: list = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.problems

    def __bool__(self):
        return self.valid


def validate_check_matrix(M: StructuredCheckMatrix) -> ValidationReport:
    """Check the structural conditions that make the defined code 1-perfect."""
    p, k = M.p, M.k
    rep = ValidationReport()
    exps = M.order_exponents()
    for r, e in enumerate(exps):
        if not 1 <= e <= k:
            rep.problems.append(f"row {r}: declared order {M.row_orders[r]} is not p^o with 1 <= o <= {k}")
    gammas = M.gammas
    profile = None
    if gammas[-1] == 0:
        rep.problems.append(f"no row of order p^{k}")
    elif len(exps) == sum(gammas):
        profile = perfect_params(p, gammas)

    expo = M.alphabet.exponents
    for r, row in enumerate(M.rows):
        actual = max((order_of(int(x), p, int(i)) for x, i in zip(row, expo)), default=1)
        if actual != M.row_orders[r]:
            rep.problems.append(f"row {r}: order {actual} != declared {M.row_orders[r]}")

    if M.rows.shape[0]:
        emb = chainlin.RingMatrix(M.alphabet.ring, M.rows * M.alphabet.scale)
        got = chainlin.span_size(emb)
        want = p ** sum(e for e in exps if e > 0)
        if got != want:
            rep.problems.append(f"rows are dependent: span has {got} elements, expected {want}")

    if profile is not None and profile.alphas != M.alphas:
        rep.problems.append(f"block lengths {M.alphas} != required {profile.alphas}")

    offset = 0
    for i in range(1, k + 1):
        cols = M.block_columns(i)
        seen = {}
        for j, col in enumerate(cols):
            g = offset + j
            order = max((order_of(int(x), p, i) for x in col), default=1)
            if order != p**i:
                rep.problems.append(f"column {g} (block {i}): order {order} != {p**i}")
                continue
            canon = canonical_column(col, p, i)
            if canon in seen:
                rep.problems.append(f"columns {seen[canon]} and {g} (block {i}) are collinear")
            else:
                seen[canon] = g
        offset += M.alphas[i - 1] if i - 1 < len(M.alphas) else 0
    return rep


def build_perfect_check(p: int, gammas) -> StructuredCheckMatrix:
    """Check matrix with one canonical column per collinearity class in each block."""
    prof = perfect_params(p, gammas)
    k = prof.k
    order_exps = [o for o in range(1, k + 1) for _ in range(prof.gammas[o - 1])]
    blocks = []
    for i in range(1, k + 1):
        choices = [[p ** max(0, i - o) * t for t in range(p ** min(i, o))] for o in order_exps]
        keep = []
        for col in itertools.product(*choices):
            if not any(x % p for x in col):
                continue
            if canonical_column(col, p, i) == col:
                keep.append(col)
        if len(keep) != prof.alphas[i - 1]:
            raise ArithmeticError(f"block {i}: {len(keep)} classes, expected {prof.alphas[i - 1]}")
        blocks.append(np.array(keep, dtype=np.int64).reshape(-1, len(order_exps)).T)
    rows = np.concatenate(blocks, axis=1)
    return StructuredCheckMatrix(p, prof.alphas, rows, tuple(p**o for o in order_exps))


def weight_one_errors(alphabet: MixedAlphabet) -> np.ndarray:
    """The zero word and every word with a single unit entry (diamond weight <= 1)."""
    rows = [np.zeros(alphabet.length, dtype=np.int64)]
    for j, i in enumerate(alphabet.exponents):
        q = alphabet.p ** int(i)
        for x in range(1, q):
            if x % alphabet.p:
                e = np.zeros(alphabet.length, dtype=np.int64)
                e[j] = x
                rows.append(e)
    return np.array(rows)


def weight_one_syndromes(M: StructuredCheckMatrix) -> np.ndarray:
    """Syndromes of all diamond-weight <= 1 errors, each row component in Z_{p^o}."""
    a = M.alphabet
    errs = weight_one_errors(a)
    raw = kernels.syndromes(errs, M.rows, a.scale, a.ring.modulus)
    shift = np.array([a.p ** (a.k - e) if e > 0 else 1 for e in M.order_exponents()], dtype=np.int64)
    return raw // shift


def verify_perfect_syndrome(M: StructuredCheckMatrix) -> bool:
    """True iff the weight <= 1 errors have pairwise distinct syndromes filling all p^gamma values."""
    syn = weight_one_syndromes(M)
    distinct = len({tuple(r) for r in syn.tolist()})
    gamma = sum(M.order_exponents())
    return distinct == syn.shape[0] == M.p**gamma


def is_one_perfect(alphabet: MixedAlphabet, words, budget: int | None = None) -> bool:
    """True iff every word of the space is within diamond distance 1 of exactly one of ``words``."""
    check_budget("exhaustive perfection check", alphabet.space_size,
                 EXHAUSTIVE_BUDGET if budget is None else budget)
    counts = kernels.cover_counts(np.asarray(words, dtype=np.int64).reshape(-1, alphabet.length),
                                  weight_one_errors(alphabet), alphabet.moduli)
    return bool((counts == 1).all())


def verify_perfect_exhaustive(code: AdditiveCode, budget: int | None = None) -> bool:
    return is_one_perfect(code.alphabet, code.words(), budget)


@dataclass
class OneWeightReport:
    """Outcome of the one-weight check on the row span of a check matrix.

    ``hamming_params`` are (length, size, minimum distance) of varphi(C)
    for the kernel code C; ``phi_params`` the same for phi(C).
    """

    weights: set
    expected_weight: int
    hamming_params: tuple | None
    expected_params: tuple
    phi_params: tuple | None = None

    @property
    def one_weight(self) -> bool:
        return self.weights == {self.expected_weight}

    @property
    def hamming_ok(self) -> bool:
        return self.hamming_params is None or self.hamming_params == self.expected_params

    @property
    def ok(self) -> bool:
        return self.one_weight and self.hamming_ok


def dual_one_weight_check(M: StructuredCheckMatrix, budget: int | None = None) -> OneWeightReport:
    """Homogeneous weights of the row span, plus Gray-image parameters of the kernel code."""
    p = M.p
    gamma = sum(M.order_exponents())
    span = code_from_generators(M.alphabet, M.rows)
    w = weights(span, "hom", budget)
    n = (p**gamma - 1) // (p - 1)
    size = p ** (n - gamma)
    expected = (n, size, 3 if size > 1 else None)
    code = M.code()
    params = phi = None
    try:
        hw = weights(code, "hom", budget)
        nz = hw[hw > 0]
        length = M.alphabet.image_length
        phi = (length, code.size, int(nz.min()) if nz.size else None)
        params = (length, varphi_size(code), varphi_min_distance(code, budget))
    except BudgetExceeded:
        pass
    return OneWeightReport({int(x) for x in w[w > 0]}, p ** (gamma - 1), params, expected, phi)
