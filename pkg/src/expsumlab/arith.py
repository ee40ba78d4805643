"""Exact integer arithmetic primitives.

Everything here is deterministic trial-division arithmetic, adequate for
moduli well below 10^9 (the sweeps in this package never exceed a few
hundred).  No probabilistic primality, no big-number shortcuts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


class NotRepresentableError(ValueError):
    """Raised when 4p = d^2 + 27 b^2 has no admissible solution."""


def factorize(q: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of q >= 1 as ((p, e), ...), ascending primes."""
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    out = []
    n = q
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Modulus:
    """A positive modulus with its factorization cached."""

    q: int
    factorization: tuple[tuple[int, int], ...]
    is_prime: bool

    @classmethod
    def from_int(cls, q: int) -> "Modulus":
        fac = factorize(q)
        return cls(q=q, factorization=fac, is_prime=(len(fac) == 1 and fac[0][1] == 1 and q > 1))

    @property
    def phi(self) -> int:
        out = 1
        for p, e in self.factorization:
            out *= (p - 1) * p ** (e - 1)
        return out

    @property
    def omega(self) -> int:
        return len(self.factorization)

    @property
    def divisor_count(self) -> int:
        out = 1
        for _, e in self.factorization:
            out *= e + 1
        return out

    @property
    def unitary_primes(self) -> tuple[int, ...]:
        """Primes p with p | q and p^2 not dividing q (p || q)."""
        return tuple(p for p, e in self.factorization if e == 1)

    def units(self) -> list[int]:
        return [a for a in range(1, self.q + 1) if math.gcd(a, self.q) == 1]


def as_modulus(q) -> Modulus:
    return q if isinstance(q, Modulus) else Modulus.from_int(int(q))


def gcd3(m: int, n: int, q: int) -> int:
    """gcd of three arguments; gcd3(0, 0, q) = q."""
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    return math.gcd(m, n, q)


def mod_inverse(a: int, q: int) -> int:
    """The inverse of a mod q, in [1, q-1]. Requires gcd(a, q) = 1."""
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    a %= q
    if math.gcd(a, q) != 1:
        raise ValueError(f"{a} is not a unit mod {q}")
    return pow(a, -1, q)


@lru_cache(maxsize=4096)
def _check_odd_prime(p: int) -> None:
    if p % 2 == 0 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) via Euler's criterion; p must be an odd prime."""
    _check_odd_prime(p)
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    return 1 if t == 1 else -1


def factor_functions(q: int) -> tuple[int, int, int]:
    """(phi(q), omega(q), d(q)) from one trial-division factorization."""
    m = as_modulus(q)
    return m.phi, m.omega, m.divisor_count


def primes_in_range(lo: int, hi: int) -> list[int]:
    """All primes p with lo <= p <= hi, ascending."""
    if lo > hi:
        raise ValueError(f"empty range: lo={lo} > hi={hi}")
    if hi < 2:
        return []
    sieve = bytearray([1]) * (hi + 1)
    sieve[0:2] = b"\x00\x00"
    for d in range(2, math.isqrt(hi) + 1):
        if sieve[d]:
            sieve[d * d :: d] = b"\x00" * len(range(d * d, hi + 1, d))
    return [n for n in range(max(lo, 2), hi + 1) if sieve[n]]


@dataclass(frozen=True)
class DRep:
    """The representation 4p = d^2 + 27 b^2 with d = 1 mod 3, b >= 0."""

    d: int
    b: int


def represent_4p(p: int) -> DRep:
    """Unique (d, b) with 4p = d^2 + 27 b^2 and d = 1 (mod 3).

    Exists exactly for primes p = 1 (mod 3); the sign of d is forced by
    the congruence.
    """
    if not is_prime(p) or p % 3 != 1:
        raise NotRepresentableError(f"p = {p} is not a prime with p = 1 mod 3")
    for b in range(math.isqrt(4 * p // 27) + 1):
        r = 4 * p - 27 * b * b
        d = math.isqrt(r)
        if d * d == r:
            for s in (d, -d):
                if s % 3 == 1:
                    return DRep(d=s, b=b)
    raise NotRepresentableError(f"no representation found for p = {p}")
