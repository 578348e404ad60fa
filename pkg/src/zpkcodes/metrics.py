"""Per-symbol weights on Z_{p^i}: Hamming, homogeneous (star) and diamond."""
from __future__ import annotations

import numpy as np

from .errors import InvalidInput

METRICS = ("hamming", "star", "diamond", "hom")


def symbol_weight(x: int, p: int, i: int, metric: str) -> int:
    """Weight of the symbol ``x`` of Z_{p^i}.

    ``star`` is the homogeneous weight with the thresholds of Z_{p^i}; on
    Z_p it is the Hamming weight.  ``hom`` is the same weight applied
    blockwise and is kept as an alias.
    """
    x %= p**i
    if x == 0:
        return 0
    if metric == "hamming":
        return 1
    if metric in ("star", "hom"):
        if x % p ** (i - 1) == 0:
            return p ** (i - 1)
        return (p - 1) * p ** (i - 2)
    if metric == "diamond":
        return 1 if x % p else 2
    raise InvalidInput(f"unknown metric {metric!r}; expected one of {METRICS}")


def weight_table(p: int, exponents, metric: str) -> np.ndarray:
    """Lookup table ``T[j, x]`` = weight of symbol x at coordinate j."""
    exponents = list(exponents)
    width = p ** max(exponents, default=1)
    table = np.zeros((len(exponents), width), dtype=np.int64)
    rows = {}
    for j, i in enumerate(exponents):
        if i not in rows:
            rows[i] = [symbol_weight(x, p, i, metric) for x in range(p**i)]
        table[j, : p**i] = rows[i]
    return table


def symbol_class(x: int, p: int) -> int:
    """0 for zero, 1 for units (p does not divide x), 2 for nonzero multiples of p."""
    if x == 0:
        return 0
    return 1 if x % p else 2
