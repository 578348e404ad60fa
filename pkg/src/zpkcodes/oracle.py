"""Brute-force reference computations.

Nothing here calls the echelon / kernel machinery or the compiled
kernels; everything is closure, full-space scans and explicit images.
"""
from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass

import numpy as np

from .additive import AdditiveCode, MixedAlphabet
from .errors import check_budget
from .gray import build_gray_tables
from .wenum import BiPoly

ORACLE_BUDGET = 1 << 20


def closure(alphabet: MixedAlphabet, generators) -> frozenset:
    """Additive closure of the generators; equals their Z_{p^k}-span."""
    mods = [int(m) for m in alphabet.moduli]
    gens = [tuple(int(x) for x in g) for g in np.asarray(generators).reshape(-1, alphabet.length)]
    zero = (0,) * alphabet.length
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                s = tuple((a + b) % m for a, b, m in zip(w, g, mods))
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    return frozenset(seen)


def code_words(code: AdditiveCode) -> frozenset:
    return closure(code.alphabet, code.generators)


def _ip(alphabet, x, y):
    p, k = alphabet.p, alphabet.k
    total = 0
    for u, v, i in zip(x, y, alphabet.exponents):
        total += p ** (k - int(i)) * ((u * v) % p ** int(i))
    return total % p**k


def brute_dual(code: AdditiveCode, budget: int | None = None) -> frozenset:
    """Every word orthogonal to every codeword, by a scan of the whole space."""
    a = code.alphabet
    check_budget("brute dual", a.space_size, ORACLE_BUDGET if budget is None else budget)
    # orthogonality to the generators is enough by bilinearity; scan against those
    gens = [tuple(int(x) for x in g) for g in code.generators] or [(0,) * a.length]
    out = set()
    for z in itertools.product(*[range(int(m)) for m in a.moduli]):
        if all(_ip(a, z, g) == 0 for g in gens):
            out.add(z)
    return frozenset(out)


def _cosets_by_scan(p: int, k: int):
    """Map label -> list of words, by labeling every vector of Z_p^{p^{k-1}}."""
    t = build_gray_tables(p, k)
    m = p ** (k - 1)
    A = t.A.tolist()
    out = defaultdict(list)
    for u in itertools.product(range(p), repeat=m):
        label = 0
        for r, row in enumerate(A):
            label += (sum(a * b for a, b in zip(row, u)) % p) * p**r
        out[label].append(u)
    return out


def phi_image(code: AdditiveCode) -> set:
    a = code.alphabet
    tabs = {int(i): build_gray_tables(a.p, int(i)).codewords.tolist() for i in set(a.exponents.tolist())}
    out = set()
    for w in code_words(code):
        img = []
        for x, i in zip(w, a.exponents):
            img.extend(tabs[int(i)][x])
        out.add(tuple(img))
    return out


def varphi_image(code: AdditiveCode, budget: int | None = None) -> set:
    a = code.alphabet
    cosets = {int(i): _cosets_by_scan(a.p, int(i)) for i in set(a.exponents.tolist())}
    words = code_words(code)
    size = len(words)
    for i, alpha in enumerate(a.alphas, start=1):
        size *= (a.p ** (a.p ** (i - 1) - i)) ** alpha
    check_budget("brute varphi image", size, ORACLE_BUDGET if budget is None else budget)
    out = set()
    for w in words:
        choices = [cosets[int(i)][x] for x, i in zip(w, a.exponents)]
        for parts in itertools.product(*choices):
            out.add(tuple(itertools.chain.from_iterable(parts)))
    return out


def brute_image_enumerator(code: AdditiveCode, which: str = "phi", budget: int | None = None) -> BiPoly:
    """Hamming enumerator of the fully materialized phi or varphi image."""
    if which == "phi":
        img = phi_image(code)
    elif which == "varphi":
        img = varphi_image(code, budget)
    else:
        raise ValueError(f"unknown map {which!r}")
    n = code.alphabet.image_length
    counts = Counter(sum(1 for v in w if v) for w in img)
    return BiPoly(n, [counts.get(w, 0) for w in range(n + 1)])


def brute_min_distance(words) -> int | None:
    """Minimum pairwise Hamming distance of an explicit word set."""
    arr = np.array(sorted(set(map(tuple, words))), dtype=np.int8)
    if len(arr) < 2:
        return None
    best = arr.shape[1] + 1
    for s in range(0, len(arr), 256):
        block = arr[s : s + 256]
        d = (block[:, None, :] != arr[None, :, :]).sum(axis=2)
        for r in range(block.shape[0]):
            d[r, s + r] = best
        best = min(best, int(d.min()))
    return best


def brute_varphi_min_distance(code: AdditiveCode) -> int | None:
    """Minimum distance of varphi(C) without assuming anything about coset weights.

    Differences of image words fill the coset products with labels
    c (-) c' (digitwise syndrome difference), plus D^n itself; each such
    product is scanned coordinate by coordinate.
    """
    a = code.alphabet
    p = a.p
    exps = [int(i) for i in a.exponents]
    cosets = {i: _cosets_by_scan(p, i) for i in set(exps)}
    minw = {i: {lab: min(sum(1 for v in w if v) for w in ws) for lab, ws in cs.items()}
            for i, cs in cosets.items()}
    dmin = {i: min((sum(1 for v in w if v) for w in cs[0] if any(w)), default=None)
            for i, cs in cosets.items()}

    def digits(x, i):
        return [(x // p**t) % p for t in range(i)]

    def minus(x, y, i):
        dx, dy = digits(x, i), digits(y, i)
        return sum(((u - v) % p) * p**t for t, (u, v) in enumerate(zip(dx, dy)))

    cands = [d for i, d in dmin.items() if d is not None]
    words = sorted(code_words(code))
    labels = set()
    for c in words:
        for c2 in words:
            if c != c2:
                labels.add(tuple(minus(x, y, i) for x, y, i in zip(c, c2, exps)))
    for lab in labels:
        cands.append(sum(minw[i][x] for x, i in zip(lab, exps)))
    return min(cands) if cands else None


@dataclass(frozen=True)
class CensusClass:
    min_weight: int
    distribution: tuple
    cosets: int


def coset_distribution_census(p: int, k: int, budget: int | None = None) -> list[CensusClass]:
    """Group the p^k cosets of D by their Hamming weight distribution."""
    m = p ** (k - 1)
    check_budget("coset census", p**m, ORACLE_BUDGET if budget is None else budget)
    cosets = _cosets_by_scan(p, k)
    groups: Counter = Counter()
    for label in range(p**k):
        c = Counter(sum(1 for v in w if v) for w in cosets[label])
        groups[tuple(c.get(w, 0) for w in range(m + 1))] += 1
    out = [CensusClass(next(w for w, n in enumerate(dist) if n), dist, n) for dist, n in groups.items()]
    return sorted(out, key=lambda c: c.min_weight)
