"""Matrix algebra over the chain ring Z_{p^k}.

Every nonzero element of Z_{p^k} is p^v times a unit, so Gaussian
elimination works as long as each pivot has the smallest valuation among
the entries it has to clear.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import kernels
from .errors import InvalidInput, check_budget
from .zring import PrimePower, unit_inverse, valuation


@dataclass(frozen=True, eq=False)
class RingMatrix:
    ring: PrimePower
    entries: np.ndarray = field(repr=False)

    def __post_init__(self):
        a = np.array(self.entries, dtype=np.int64, copy=True)
        if a.ndim == 1:
            a = a.reshape(1, -1) if a.size else a.reshape(0, 0)
        if a.ndim != 2:
            raise InvalidInput("matrix entries must be two-dimensional")
        a %= self.ring.modulus
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @classmethod
    def zeros(cls, ring, rows, cols):
        return cls(ring, np.zeros((rows, cols), dtype=np.int64))

    @property
    def shape(self):
        return self.entries.shape

    def tolist(self):
        return self.entries.tolist()

    def __eq__(self, other):
        return (isinstance(other, RingMatrix) and self.ring == other.ring
                and self.shape == other.shape
                and bool(np.array_equal(self.entries, other.entries)))

    def __repr__(self):
        return f"RingMatrix({self.ring}, {self.tolist()})"


class Pivot(NamedTuple):
    row: int
    col: int
    valuation: int


def _valuations(a, p, k):
    out = np.full(a.shape, k, dtype=np.int64)
    rest = a.copy()
    nz = rest != 0
    v = 0
    while nz.any() and v < k:
        hit = nz & (rest % p != 0)
        out[hit] = v
        nz &= ~hit
        rest[nz] //= p
        v += 1
    return out


def _pick_pivot(vals, k):
    """Leftmost column holding the minimal valuation, lowest row within it."""
    vmin = int(vals.min()) if vals.size else k
    if vmin >= k:
        return None
    rows, cols = np.nonzero(vals == vmin)
    order = np.lexsort((rows, cols))
    return int(rows[order[0]]), int(cols[order[0]]), vmin


def row_echelon(M: RingMatrix, hermite: bool = False):
    """Echelon form with the same row span as ``M``.

    Returns ``(E, pivots)``.  Pivot entries are powers of p and rows of
    zero order are dropped.  With ``hermite=True`` the entries above each
    pivot are also reduced modulo the pivot value.
    """
    p, k, q = M.ring.p, M.ring.k, M.ring.modulus
    a = M.entries.copy()
    nrows, ncols = a.shape
    done_cols: list[int] = []
    pivots: list[Pivot] = []
    t = 0
    while t < nrows:
        vals = _valuations(a[t:], p, k)
        if done_cols:
            vals[:, done_cols] = k
        pick = _pick_pivot(vals, k)
        if pick is None:
            break
        i, j, v = pick
        i += t
        if i != t:
            a[[t, i]] = a[[i, t]]
        unit = int(a[t, j]) // p**v
        a[t] = a[t] * unit_inverse(unit, q) % q
        pv = p**v
        for r in range(t + 1, nrows):
            if a[r, j]:
                a[r] = (a[r] - (int(a[r, j]) // pv) * a[t]) % q
        if hermite:
            for r in range(t):
                if a[r, j] >= pv:
                    a[r] = (a[r] - (int(a[r, j]) // pv) * a[t]) % q
        pivots.append(Pivot(t, j, v))
        done_cols.append(j)
        t += 1
    return RingMatrix(M.ring, a[:t].reshape(t, ncols)), pivots


def span_size(M: RingMatrix) -> int:
    _, pivots = row_echelon(M)
    size = 1
    for pv in pivots:
        size *= M.ring.p ** (M.ring.k - pv.valuation)
    return size


def _diagonalize(M: RingMatrix):
    """Row and column reduce to diag(p^v_t); returns (valuations, V) with V the column transform."""
    p, k, q = M.ring.p, M.ring.k, M.ring.modulus
    a = M.entries.copy()
    nrows, ncols = a.shape
    V = np.eye(ncols, dtype=np.int64)
    vals_out: list[int] = []
    for t in range(min(nrows, ncols)):
        vals = _valuations(a[t:, t:], p, k)
        pick = _pick_pivot(vals, k)
        if pick is None:
            break
        i, j, v = pick
        i += t
        j += t
        a[[t, i]] = a[[i, t]]
        a[:, [t, j]] = a[:, [j, t]]
        V[:, [t, j]] = V[:, [j, t]]
        unit = int(a[t, t]) // p**v
        a[t] = a[t] * unit_inverse(unit, q) % q
        pv = p**v
        for r in range(t + 1, nrows):
            if a[r, t]:
                a[r] = (a[r] - (int(a[r, t]) // pv) * a[t]) % q
        for c in range(t + 1, ncols):
            if a[t, c]:
                f = int(a[t, c]) // pv
                a[:, c] = (a[:, c] - f * a[:, t]) % q
                V[:, c] = (V[:, c] - f * V[:, t]) % q
        vals_out.append(v)
    return vals_out, V


def kernel(M: RingMatrix) -> RingMatrix:
    """Generating rows of the solution module {u : M u = 0 (mod p^k)}."""
    p, k = M.ring.p, M.ring.k
    ncols = M.shape[1]
    vals, V = _diagonalize(M)
    gens = []
    for t in range(ncols):
        if t < len(vals):
            if vals[t] == 0:
                continue
            gens.append(V[:, t] * p ** (k - vals[t]))
        else:
            gens.append(V[:, t])
    if not gens:
        return RingMatrix.zeros(M.ring, 0, ncols)
    g = RingMatrix(M.ring, np.array(gens))
    e, _ = row_echelon(g)
    return e


def span(rows: RingMatrix, budget: int | None = None):
    """Every distinct Z_{p^k}-combination of ``rows``, exactly once.

    Returns ``(words, size)``; words follow lexicographic order of the
    coefficient tuples over the echelon rows.
    """
    e, pivots = row_echelon(rows)
    p, k, q = rows.ring.p, rows.ring.k, rows.ring.modulus
    bounds = [p ** (k - pv.valuation) for pv in pivots]
    size = int(np.prod(bounds, dtype=object)) if bounds else 1
    check_budget("span enumeration", size, budget)
    ncols = rows.shape[1]
    moduli = np.full(ncols, q, dtype=np.int64)
    words = kernels.span_words(e.entries.reshape(len(pivots), ncols),
                               np.array(bounds, dtype=np.int64), moduli)
    return words, size
