"""Numerical exploration of the 2k-th power-mean conjecture.

The conjectured asymptotic is

    sum_{m=0}^{p-1} |sum_{a=0}^{p-1} e((m a^3 + a)/p)|^{2k}
        = C_k * p^{k+1} + O(p^{k+1/2}),   C_k = binom(2k,k)/(k+1).

Exact values come from the fixed-point power-mean kernel; the error term
is tracked in the conjecture's own scale p^{k+1/2}.  For k <= 4 every
value is cross-checked against the closed forms the registry carries;
for k = 5, 6 only observed maxima are reported, no threshold asserted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .arith import is_prime, primes_in_range, represent_4p
from .exp_sums import RESIDUAL_TOL, ResidualError, power_mean
from .registry import CONJECTURE_FAMILY

MAX_K = 6  # closed forms and the author's unpublished proofs stop here


@dataclass(frozen=True)
class ConjectureRow:
    p: int
    k: int
    value: int
    catalan: int
    main_term: int
    normalized_residual: float  # (value - main_term) / p^(k + 1/2)


@dataclass
class CrossCheck:
    checked: bool
    all_match: bool = True
    mismatches: list[tuple[int, int, int]] = field(default_factory=list)  # (p, value, expected)


@dataclass
class ConjectureReport:
    k: int
    rows: list[ConjectureRow]
    max_abs_normalized_residual: float
    max_power_mean_residual: float
    crosscheck: CrossCheck


def catalan(k: int) -> int:
    """C_k = binom(2k, k) / (k+1), exact."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return math.comb(2 * k, k) // (k + 1)


def conjecture_value(p: int, k: int) -> int:
    """Exact integer value of the conjecture's 2k-th power mean at p.

    The m = 0 term contributes 0 (sum_a e(a/p) = 0), so this also equals
    the m = 1..p-1 mean of the cubic family with n = 1.
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p}")
    if not 1 <= k <= MAX_K:
        raise ValueError(f"k must be in 1..{MAX_K}, got {k}")
    r = power_mean(CONJECTURE_FAMILY, p, 2 * k)
    if r.residual >= RESIDUAL_TOL:
        raise ResidualError(f"power mean residual {r.residual} at p={p}, k={k}")
    return r.rounded


def closed_form(p: int, k: int) -> int | None:
    """Known exact value of the conjecture sum, where one exists.

    k = 1 comes from a counting argument (cube-roots of unity), k = 2..4
    from the published 4th/6th/8th power-mean identities; the m = 0 term
    vanishes so those means coincide with the conjecture sum.  Returns
    None when no closed form applies.
    """
    if k == 1:
        return p * p - 2 * p if p % 3 == 1 else p * p
    if p <= 3:
        return None
    if k == 2:
        return 2 * p**3 - p**2 if (p - 1) % 3 != 0 else 2 * p**3 - 7 * p**2
    if k == 3:
        if p % 6 == 5:
            return 5 * p**3 * (p - 1)
        d = represent_4p(p).d
        return 5 * p**4 - 23 * p**3 - d * d * p**2
    if k == 4:
        if p % 6 == 5:
            return 7 * (2 * p**5 - 3 * p**4)
        d = represent_4p(p).d
        return 14 * p**5 - 75 * p**4 - 8 * p**3 * d * d
    return None


def conjecture_report(k: int, prime_lo: int, prime_hi: int, parallelism: int = 1) -> ConjectureReport:
    """Rows for every odd prime in [prime_lo, prime_hi], ascending."""
    primes = [p for p in primes_in_range(prime_lo, prime_hi) if p > 2]
    ck = catalan(k)

    def row(p: int) -> tuple[ConjectureRow, float]:
        r = power_mean(CONJECTURE_FAMILY, p, 2 * k)
        main = ck * p ** (k + 1)
        norm = (r.rounded - main) / p ** (k + 0.5)
        return ConjectureRow(p, k, r.rounded, ck, main, norm), r.residual

    if parallelism > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            results = list(pool.map(row, primes))
    else:
        results = [row(p) for p in primes]

    rows = [r for r, _ in results]
    max_resid = max((res for _, res in results), default=0.0)
    cc = CrossCheck(checked=(k <= 4))
    if cc.checked:
        for r in rows:
            expected = closed_form(r.p, k)
            if expected is not None and expected != r.value:
                cc.all_match = False
                cc.mismatches.append((r.p, r.value, expected))
    return ConjectureReport(
        k=k,
        rows=rows,
        max_abs_normalized_residual=max((abs(r.normalized_residual) for r in rows), default=0.0),
        max_power_mean_residual=max_resid,
        crosscheck=cc,
    )
