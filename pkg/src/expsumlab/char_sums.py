"""Legendre-symbol character sums of integer polynomials.

Includes the two specific sums whose difference is the corollary under
test: (-1/p) * sum((c^3+c^2+c)/p) and C(p) = sum(((b^2+1)(b^2+4b+1))/p).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .arith import _check_odd_prime, mod_inverse

FROM_ONE = "from_one"
FROM_ZERO = "from_zero"


@dataclass(frozen=True)
class PolynomialZ:
    """Integer polynomial, coefficients ascending; () is the zero poly."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @classmethod
    def of(cls, *coeffs: int) -> "PolynomialZ":
        """Build from ascending coefficients, trimming trailing zeros."""
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        return cls(tuple(c))

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: int) -> int:
        v = 0
        for c in reversed(self.coeffs):
            v = v * x + c
        return v

    def eval_mod(self, x: int, p: int) -> int:
        v = 0
        for c in reversed(self.coeffs):
            v = (v * x + c) % p
        return v

    def shift(self, t: int) -> "PolynomialZ":
        """f(x + t)."""
        out = [0]
        for c in reversed(self.coeffs):
            # out(x) = out(x) * (x + t) + c
            nxt = [0] * (len(out) + 1)
            for i, o in enumerate(out):
                nxt[i + 1] += o
                nxt[i] += o * t
            nxt[0] += c
            out = nxt
        return PolynomialZ.of(*out)

    def reflect(self) -> "PolynomialZ":
        """f(-x)."""
        return PolynomialZ.of(*((-1) ** i * c for i, c in enumerate(self.coeffs)))

    def scale(self, s: int) -> "PolynomialZ":
        return PolynomialZ.of(*(s * c for c in self.coeffs))

    def derivative(self) -> "PolynomialZ":
        return PolynomialZ.of(*(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                term = str(abs(c))
            else:
                xs = "x" if i == 1 else f"x^{i}"
                term = xs if abs(c) == 1 else f"{abs(c)}{xs}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        s0, t0 = parts[0]
        out = ("-" if s0 == "-" else "") + t0
        for sign, term in parts[1:]:
            out += sign + term
        return out


X = PolynomialZ.of(0, 1)

# the two polynomials of the corollary
CUBIC_CCC = PolynomialZ.of(0, 1, 1, 1)  # x^3 + x^2 + x
NING_WANG_QUARTIC = PolynomialZ.of(1, 4, 2, 4, 1)  # (x^2+1)(x^2+4x+1)


@lru_cache(maxsize=512)
def legendre_table(p: int) -> tuple[int, ...]:
    """(a/p) for a = 0..p-1, built from the set of nonzero squares."""
    _check_odd_prime(p)
    table = [-1] * p
    table[0] = 0
    for x in range(1, p):
        table[x * x % p] = 1
    return tuple(table)


def char_sum_poly(f: PolynomialZ, p: int, range_mode: str = FROM_ONE) -> int:
    """sum over x of ((f(x))/p), x in 1..p-1 (from_one) or 0..p-1."""
    if f.is_zero:
        raise ValueError("character sum of the zero polynomial")
    if range_mode not in (FROM_ONE, FROM_ZERO):
        raise ValueError(f"bad range {range_mode!r}")
    table = np.array(legendre_table(p), dtype=np.int64)
    lo = 1 if range_mode == FROM_ONE else 0
    xs = np.arange(lo, p, dtype=np.int64)
    vals = np.zeros_like(xs)
    for c in reversed(f.coeffs):
        vals = (vals * xs + c) % p
    return int(table[vals].sum())


def ning_wang_c(p: int) -> int:
    """C(p) = sum_{b=1}^{p-1} (((b^2+1)(b^2+4b+1))/p)."""
    return char_sum_poly(NING_WANG_QUARTIC, p, FROM_ONE)


def salie_twisted_char_sum(p: int) -> int:
    """sum_{c=1}^{p-1} ((c + 1 + cbar)/p)."""
    table = legendre_table(p)
    return sum(table[(c + 1 + mod_inverse(c, p)) % p] for c in range(1, p))


@dataclass(frozen=True)
class Corollary1Result:
    p: int
    term1: int  # (-1/p) * sum((c^3+c^2+c)/p)
    term2: int  # C(p)
    difference: int
    passed: bool


def corollary1_check(p: int) -> Corollary1Result:
    """Check that the two character sums differ by exactly 2."""
    table = legendre_table(p)
    term1 = table[p - 1] * char_sum_poly(CUBIC_CCC, p, FROM_ONE)
    term2 = ning_wang_c(p)
    diff = term1 - term2
    return Corollary1Result(p=p, term1=term1, term2=term2, difference=diff, passed=(diff == 2))
