"""Shared brute-force oracles, independent of the library's fast paths."""

import cmath
import math

import pytest


def e_p(x: int, p: int) -> complex:
    """e(x/p) straight from cmath; the test-side root of unity."""
    return cmath.exp(2j * math.pi * (x % p) / p)


def legendre_by_squares(a: int, p: int) -> int:
    """Legendre symbol by enumerating the nonzero squares mod p."""
    a %= p
    if a == 0:
        return 0
    squares = {x * x % p for x in range(1, p)}
    return 1 if a in squares else -1


def char_sum_direct(coeffs, p: int, include_zero: bool = False) -> int:
    """Direct character sum of the ascending-coefficient polynomial."""
    total = 0
    for x in range(0 if include_zero else 1, p):
        v = 0
        for c in reversed(coeffs):
            v = (v * x + c) % p
        total += legendre_by_squares(v, p)
    return total


def power_mean_direct(inner_terms, sweep, power: int) -> float:
    """sum over the sweep of |inner sum|^power, all in plain cmath."""
    return math.fsum(abs(sum(inner_terms(t))) ** power for t in sweep)


@pytest.fixture(scope="session")
def small_odd_primes():
    return [3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
