"""Weight-enumerator calculus with exact integer coefficients.

Convention: a coordinate contributes X when it is zero and Y otherwise,
so W(X, Y) = sum_c X^{n - wt(c)} Y^{wt(c)}.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .additive import AdditiveCode, MixedAlphabet, weights
from .errors import InvalidInput, NonIntegralDivision
from .gray import varphi_size

COSET_CLASSES = ("zero", "unit", "divisible")


class BiPoly:
    """Homogeneous polynomial sum_w coeffs[w] X^{degree-w} Y^w."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs=()):
        coeffs = [int(c) for c in coeffs]
        if len(coeffs) > degree + 1:
            if any(coeffs[degree + 1:]):
                raise InvalidInput("coefficient beyond the degree")
            coeffs = coeffs[: degree + 1]
        coeffs += [0] * (degree + 1 - len(coeffs))
        self.degree = degree
        self.coeffs = tuple(coeffs)

    @classmethod
    def monomial(cls, degree: int, w: int, c: int = 1) -> BiPoly:
        out = [0] * (degree + 1)
        out[w] = c
        return cls(degree, out)

    @classmethod
    def one(cls) -> BiPoly:
        return cls(0, [1])

    @classmethod
    def X(cls) -> BiPoly:
        return cls(1, [1, 0])

    @classmethod
    def Y(cls) -> BiPoly:
        return cls(1, [0, 1])

    @classmethod
    def from_weights(cls, ws, n: int) -> BiPoly:
        counts = np.bincount(np.asarray(ws, dtype=np.int64), minlength=n + 1)
        return cls(n, counts.tolist())

    def terms(self):
        """(w, coefficient) pairs with nonzero coefficient, ascending in w."""
        return [(w, c) for w, c in enumerate(self.coeffs) if c]

    def coefficient(self, w: int) -> int:
        return self.coeffs[w] if 0 <= w <= self.degree else 0

    def total(self) -> int:
        return sum(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _same_degree(self, other):
        if other.degree != self.degree and not (self.is_zero() or other.is_zero()):
            raise InvalidInput(f"degrees {self.degree} and {other.degree} differ")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._same_degree(other)
        d = max(self.degree, other.degree) if self.is_zero() or other.is_zero() else self.degree
        a = self.coeffs + (0,) * (d + 1 - len(self.coeffs))
        b = other.coeffs + (0,) * (d + 1 - len(other.coeffs))
        return BiPoly(d, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return BiPoly(self.degree, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return BiPoly(self.degree, [c * other for c in self.coeffs])
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return BiPoly(self.degree + other.degree, out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result, base = BiPoly.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def exact_div(self, d: int) -> BiPoly:
        out = []
        for w, c in enumerate(self.coeffs):
            q, r = divmod(c, d)
            if r:
                raise NonIntegralDivision(f"coefficient {c} of Y^{w} is not divisible by {d}")
            out.append(q)
        return BiPoly(self.degree, out)

    def substitute(self, fx: BiPoly, fy: BiPoly) -> BiPoly:
        """sum_w coeffs[w] * fx^{n-w} * fy^w."""
        n = self.degree
        px = [BiPoly.one()]
        py = [BiPoly.one()]
        for _ in range(n):
            px.append(px[-1] * fx)
            py.append(py[-1] * fy)
        out = BiPoly(n * fx.degree)
        for w, c in self.terms():
            out = out + (px[n - w] * py[w]) * c
        return out

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __repr__(self):
        return f"BiPoly({self.to_text()})"

    def __str__(self):
        return self.to_text()

    def to_text(self) -> str:
        """Terms by descending X-exponent, e.g. ``X^9 + 24*X^3*Y^6 + 2*Y^9``."""
        parts = []
        for w, c in self.terms():
            mono = "*".join(s for s in (_power("X", self.degree - w), _power("Y", w)) if s)
            mag = abs(c)
            body = mono if mag == 1 and mono else (f"{mag}*{mono}" if mono else str(mag))
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts) if parts else "0"

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> BiPoly:
        """Inverse of :meth:`to_text`."""
        src = text.replace(" ", "")
        if src in ("", "0"):
            return cls(degree or 0)
        terms = []
        for m in _TERM.finditer(src):
            if not m.group(0):
                continue
            sign = -1 if m.group("sign") == "-" else 1
            coef = int(m.group("coef")) if m.group("coef") else 1
            a = _exp(m.group("x"), m.group("xe"))
            b = _exp(m.group("y"), m.group("ye"))
            terms.append((sign * coef, a, b))
        if "".join(m.group(0) for m in _TERM.finditer(src)) != src or not terms:
            raise InvalidInput(f"cannot parse polynomial {text!r}")
        degrees = {a + b for _, a, b in terms}
        if len(degrees) != 1:
            raise InvalidInput(f"polynomial {text!r} is not homogeneous")
        n = degrees.pop()
        if degree is not None and n != degree:
            raise InvalidInput(f"expected degree {degree}, got {n}")
        out = [0] * (n + 1)
        for c, _, b in terms:
            out[b] += c
        return cls(n, out)

    def structured(self):
        return [[w, c] for w, c in self.terms()]


_TERM = re.compile(
    r"(?P<sign>[+-])?(?:(?P<coef>\d+)\*?)?(?P<x>X(?:\^(?P<xe>\d+))?)?\*?(?P<y>Y(?:\^(?P<ye>\d+))?)?"
)


def _exp(var, e):
    if not var:
        return 0
    return int(e) if e else 1


def _power(var, e):
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


# -- multi-variable enumerators ------------------------------------------------------


def _class_names(alphabet: MixedAlphabet):
    """Variable names per block: block 1 -> (zero, nonzero), block i >= 2 -> (zero, unit, divisible)."""
    nonempty = [i for i, a in enumerate(alphabet.alphas, start=1) if a]
    five = len(nonempty) <= 2 and all(i in (1, alphabet.k) for i in nonempty) and alphabet.k >= 2
    names = []
    for i in range(1, alphabet.k + 1):
        if i == 1:
            names.append(("X", "S") if five else ("X1", "S1"))
        else:
            names.append(("Y", "Z", "T") if five and i == alphabet.k else (f"Y{i}", f"Z{i}", f"T{i}"))
    return names


def _block_widths(alphabet: MixedAlphabet):
    return [2 if i == 1 else 3 for i in range(1, alphabet.k + 1)]


@dataclass(frozen=True)
class SWPoly:
    """Symmetrized enumerator: per block, counts of zero / unit / divisible symbols.

    ``terms`` maps a flat exponent tuple (block 1 contributes two entries,
    every other block three) to its coefficient.
    """

    alphabet: MixedAlphabet
    terms: dict

    def total(self) -> int:
        return sum(self.terms.values())

    def blocks(self, key):
        out, start = [], 0
        for w in _block_widths(self.alphabet):
            out.append(key[start : start + w])
            start += w
        return out

    def five_variable(self) -> dict:
        """Terms keyed by (e_X, e_S, e_Y, e_Z, e_T) for a two-block alphabet Z_p^a x Z_{p^k}^b."""
        a = self.alphabet
        if any(a.alphas[1:-1]) or a.k < 2:
            raise InvalidInput("five-variable form needs a Z_p^a x Z_{p^k}^b alphabet")
        out = {}
        for key, c in self.terms.items():
            b = self.blocks(key)
            out[tuple(b[0]) + tuple(b[-1])] = c
        return out

    def to_text(self) -> str:
        names = [n for block in _class_names(self.alphabet) for n in block]
        parts = []
        for key in sorted(self.terms, reverse=True):
            c = self.terms[key]
            if not c:
                continue
            mono = "*".join(_power(v, e) for v, e in zip(names, key) if e)
            body = mono if c == 1 and mono else (f"{c}*{mono}" if mono else str(c))
            parts.append(body)
        return " + ".join(parts) if parts else "0"

    def __str__(self):
        return self.to_text()

    def evaluate(self, subs) -> BiPoly:
        """Substitute one BiPoly per class variable; ``subs[i]`` lists them for block i+1."""
        cache = {}

        def power(b, c, e):
            key = (b, c, e)
            if key not in cache:
                cache[key] = subs[b][c] ** e
            return cache[key]

        out = None
        for key, coef in self.terms.items():
            term = BiPoly.one()
            for b, block in enumerate(self.blocks(key)):
                for c, e in enumerate(block):
                    if e:
                        term = term * power(b, c, e)
            term = term * coef
            out = term if out is None else out + term
        return out if out is not None else BiPoly(0)


@dataclass(frozen=True)
class CompleteWE:
    """Complete enumerator: key = per-block tuples of symbol counts (length p^i for block i)."""

    alphabet: MixedAlphabet
    terms: dict

    def total(self) -> int:
        return sum(self.terms.values())

    def collapse(self) -> SWPoly:
        p = self.alphabet.p
        out: Counter = Counter()
        for key, c in self.terms.items():
            flat = []
            for i, counts in enumerate(key, start=1):
                zero = counts[0]
                units = sum(n for x, n in enumerate(counts) if x % p)
                if i == 1:
                    flat += [zero, units]
                else:
                    flat += [zero, units, sum(counts) - zero - units]
            out[tuple(flat)] += c
        return SWPoly(self.alphabet, dict(out))


def hamming_enumerator(words) -> BiPoly:
    """Hamming weight enumerator of an explicit set of words over Z_p."""
    if isinstance(words, np.ndarray):
        arr = words.reshape(words.shape[0], -1) if words.ndim != 2 else words
    else:
        words = [tuple(w) for w in words]
        lengths = {len(w) for w in words}
        if len(lengths) > 1:
            raise InvalidInput(f"words of different lengths: {sorted(lengths)}")
        arr = np.array(words, dtype=np.int64).reshape(len(words), lengths.pop() if lengths else 0)
    n = arr.shape[1]
    return BiPoly.from_weights((arr != 0).sum(axis=1), n)


def complete_enumerator(code: AdditiveCode, budget: int | None = None) -> CompleteWE:
    a = code.alphabet
    words = code.words(budget)
    blocks = []
    for i, sl in enumerate(a.block_slices(), start=1):
        part = words[:, sl]
        blocks.append(np.stack([(part == s).sum(axis=1) for s in range(a.p**i)], axis=1))
    flat = np.concatenate(blocks, axis=1)
    keys, counts = np.unique(flat, axis=0, return_counts=True)
    widths = [a.p**i for i in range(1, a.k + 1)]
    terms = {}
    for key, c in zip(keys.tolist(), counts.tolist()):
        split, start = [], 0
        for w in widths:
            split.append(tuple(key[start : start + w]))
            start += w
        terms[tuple(split)] = int(c)
    return CompleteWE(a, terms)


def sw_polynomial(code: AdditiveCode, budget: int | None = None) -> SWPoly:
    """Symmetrized enumerator SW(X, S, Y, Z, T), generalized blockwise."""
    a = code.alphabet
    words = code.words(budget)
    cols = []
    for i, sl in enumerate(a.block_slices(), start=1):
        part = words[:, sl]
        zero = (part == 0).sum(axis=1)
        unit = (part % a.p != 0).sum(axis=1)
        cols += [zero, unit] if i == 1 else [zero, unit, part.shape[1] - zero - unit]
    flat = np.stack(cols, axis=1)
    keys, counts = np.unique(flat, axis=0, return_counts=True)
    return SWPoly(a, {tuple(int(v) for v in key): int(c) for key, c in zip(keys, counts)})


def macwilliams_transform(W: BiPoly, p: int, divisor: int = 1) -> BiPoly:
    """(1/divisor) * W(X + (p-1) Y, X - Y), with checked exact division."""
    X, Y = BiPoly.X(), BiPoly.Y()
    return W.substitute(X + Y * (p - 1), X - Y).exact_div(divisor)


def _check_class(cls):
    if cls not in COSET_CLASSES:
        raise InvalidInput(f"coset class must be one of {COSET_CLASSES}, got {cls!r}")


@lru_cache(maxsize=None)
def coset_enumerator_closed(p: int, k: int, cls: str) -> BiPoly:
    """Hamming enumerator of the cosets D_i of D, by class of the label i.

    ``zero``: i = 0; ``unit``: p does not divide i; ``divisible``: p | i, i != 0.
    """
    _check_class(cls)
    if k < 2:
        raise InvalidInput("coset enumerators need k >= 2")
    m = p ** (k - 1)
    X, Y = BiPoly.X(), BiPoly.Y()
    a, b = X + Y * (p - 1), X - Y
    if cls == "unit":
        total = a**m - b**m
    else:
        c = p**k - p if cls == "zero" else -p
        total = a**m + b**m * (p - 1) + (a ** (m // p) * b ** (m - m // p)) * c
    return total.exact_div(p**k)


@lru_cache(maxsize=None)
def coset_transform_closed(p: int, k: int, cls: str) -> BiPoly:
    """(1/|D_i|) W_{D_i}(X + (p-1)Y, X - Y) in closed form, by class of i."""
    _check_class(cls)
    if k < 2:
        raise InvalidInput("coset enumerators need k >= 2")
    m = p ** (k - 1)
    Xm = BiPoly.monomial(m, 0)
    Ym = BiPoly.monomial(m, m)
    if cls == "unit":
        return Xm - Ym
    mid = BiPoly.monomial(m, m - m // p)
    c = p**k - p if cls == "zero" else -p
    return Xm + Ym * (p - 1) + mid * c


def image_enumerator_phi(code: AdditiveCode, budget: int | None = None) -> BiPoly:
    """W of phi(C): each codeword contributes X^{N - wt_hom} Y^{wt_hom}."""
    return BiPoly.from_weights(weights(code, "hom", budget), code.alphabet.image_length)


def _varphi_substitutions(alphabet: MixedAlphabet):
    X, Y = BiPoly.X(), BiPoly.Y()
    subs = []
    for i in range(1, alphabet.k + 1):
        if i == 1:
            subs.append((X, Y))
        else:
            subs.append(tuple(coset_enumerator_closed(alphabet.p, i, c) for c in COSET_CLASSES))
    return subs


def _dual_substitutions(alphabet: MixedAlphabet):
    p = alphabet.p
    X, Y = BiPoly.X(), BiPoly.Y()
    subs = []
    for i in range(1, alphabet.k + 1):
        if i == 1:
            subs.append((X + Y * (p - 1), X - Y))
        else:
            subs.append(tuple(coset_transform_closed(p, i, c) for c in COSET_CLASSES))
    return subs


def _degree_fix(poly: BiPoly, alphabet: MixedAlphabet) -> BiPoly:
    n = alphabet.image_length
    return poly if poly.degree == n else BiPoly(n, poly.coeffs)


def image_enumerator_varphi(code: AdditiveCode, budget: int | None = None) -> BiPoly:
    """W of varphi(C) = SW_C(X, Y, W_{D_0}, W_{D_1}, W_{D_p}), never materializing the image."""
    sw = sw_polynomial(code, budget)
    return _degree_fix(sw.evaluate(_varphi_substitutions(code.alphabet)), code.alphabet)


def dual_image_enumerator(code: AdditiveCode, budget: int | None = None) -> BiPoly:
    """W of phi(C^perp) computed from SW_C alone, divided exactly by |C|."""
    sw = sw_polynomial(code, budget)
    raw = sw.evaluate(_dual_substitutions(code.alphabet))
    return _degree_fix(raw.exact_div(code.size), code.alphabet)


@dataclass(frozen=True)
class DualityReport:
    left: BiPoly
    right: BiPoly

    @property
    def equal(self) -> bool:
        return self.left == self.right


def duality_check(code: AdditiveCode, budget: int | None = None) -> DualityReport:
    """Compare W_{phi(C)} with the MacWilliams transform of W_{varphi(C^perp)}."""
    dual = code.dual()
    left = image_enumerator_phi(code, budget)
    right = macwilliams_transform(image_enumerator_varphi(dual, budget), code.alphabet.p,
                                  varphi_size(dual))
    return DualityReport(left, right)
