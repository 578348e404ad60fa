"""Exact arithmetic in the chain ring Z_{p^k}."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InvalidInput


def is_prime(n: int) -> bool:
    """Deterministic trial division; fine for the small primes used here."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimePower:
    p: int
    k: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise InvalidInput(f"{self.p} is not prime")
        if self.k < 1:
            raise InvalidInput(f"exponent must be >= 1, got {self.k}")

    @property
    def modulus(self) -> int:
        return self.p**self.k

    def __str__(self):
        return f"Z_{self.modulus}"

    def residue(self, value: int) -> Residue:
        """Reduce ``value`` into the canonical range."""
        return Residue(value % self.modulus, self)

    def elements(self):
        return [Residue(v, self) for v in range(self.modulus)]


@dataclass(frozen=True)
class Residue:
    value: int
    ring: PrimePower

    def __post_init__(self):
        if not 0 <= self.value < self.ring.modulus:
            raise InvalidInput(f"{self.value} is not a canonical residue of {self.ring}")

    def _other(self, other):
        if isinstance(other, Residue):
            if other.ring != self.ring:
                raise InvalidInput("residues from different rings")
            return other.value
        return other

    def __add__(self, other):
        return self.ring.residue(self.value + self._other(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self.ring.residue(self.value - self._other(other))

    def __mul__(self, other):
        return self.ring.residue(self.value * self._other(other))

    __rmul__ = __mul__

    def __neg__(self):
        return self.ring.residue(-self.value)

    def __int__(self):
        return self.value

    def is_unit(self) -> bool:
        return self.value % self.ring.p != 0


def valuation(value: int, p: int, k: int) -> int:
    """p-adic valuation of ``value`` in Z_{p^k}; zero has valuation k."""
    value %= p**k
    if value == 0:
        return k
    v = 0
    while value % p == 0:
        value //= p
        v += 1
    return v


def order_of(value: int, p: int, k: int) -> int:
    q = p**k
    return q // gcd(q, value % q)


def additive_order(x: Residue) -> int:
    """Additive order of ``x``: p^k / gcd(p^k, x)."""
    return order_of(x.value, x.ring.p, x.ring.k)


def base_p_digits(x: Residue) -> tuple[int, ...]:
    """Digits (l_0, ..., l_{k-1}) with l_0 least significant."""
    p, v = x.ring.p, x.value
    out = []
    for _ in range(x.ring.k):
        v, d = divmod(v, p)
        out.append(d)
    return tuple(out)


def from_digits(digits, ring: PrimePower) -> Residue:
    digits = tuple(digits)
    if len(digits) != ring.k:
        raise InvalidInput(f"expected {ring.k} digits, got {len(digits)}")
    value = 0
    for i, d in enumerate(digits):
        if not 0 <= d < ring.p:
            raise InvalidInput(f"digit {d} at position {i} not in [0, {ring.p})")
        value += d * ring.p**i
    return Residue(value, ring)


def unit_inverse(value: int, modulus: int) -> int:
    return pow(value, -1, modulus)
