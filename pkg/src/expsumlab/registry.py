"""Data-driven registry of the closed-form identities under test.

Each entry binds an LHS recipe (a power mean or character-sum
combination) to an integer RHS closed form plus an applicability
predicate.  evaluate() compares LHS and RHS exactly; sweeps report
pass/fail/skip counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from . import char_sums, exp_sums
from .arith import Modulus, as_modulus, is_prime, legendre, represent_4p
from .exp_sums import (
    ALL_RESIDUES,
    RESIDUAL_TOL,
    TWIST_INVERSE,
    TWIST_NONE,
    UNITS_ONLY,
    VARY_LINEAR,
    VARY_MONOMIAL,
    PhaseFamily,
    power_mean,
)

PASS = "pass"
FAIL = "fail"
SKIP = "skip"
NUMERIC = "numeric"  # residual too large to trust the rounding


class UnknownIdentityError(KeyError):
    pass


@dataclass(frozen=True)
class IdentityOutcome:
    identity_id: str
    modulus: int
    params: dict
    lhs: int | None
    rhs: int | None
    residual: float
    status: str

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def skipped(self) -> bool:
        return self.status == SKIP


@dataclass(frozen=True)
class IdentityDescriptor:
    identity_id: str
    description: str
    applicability: str
    takes_n: bool = False


@dataclass
class SweepSummary:
    n_pass: int = 0
    n_fail: int = 0
    n_skip: int = 0
    max_residual: float = 0.0


@dataclass
class SweepResult:
    outcomes: list[IdentityOutcome] = field(default_factory=list)
    summary: SweepSummary = field(default_factory=SweepSummary)


# ---------------------------------------------------------------------------
# families

def _salie_family(n: int = 1) -> PhaseFamily:
    # sum over units of e((m*a + n*abar)/q), m swept over a complete
    # residue system (the displayed m=1..q / m=0..p-1 ranges coincide)
    return PhaseFamily(1, UNITS_ONLY, TWIST_INVERSE, VARY_MONOMIAL, n, True)


_ZWL_FAMILY = PhaseFamily(2, UNITS_ONLY, TWIST_INVERSE, VARY_MONOMIAL, 1, True)


def _cubic_family(n: int = 1) -> PhaseFamily:
    # sum_{a=0}^{p-1} e((m*a^3 + n*a)/p), m = 1..p-1
    return PhaseFamily(3, ALL_RESIDUES, TWIST_NONE, VARY_MONOMIAL, n, False)


_ZH_FAMILY = PhaseFamily(3, ALL_RESIDUES, TWIST_NONE, VARY_LINEAR, 1, False)

CONJECTURE_FAMILY = PhaseFamily(3, ALL_RESIDUES, TWIST_NONE, VARY_MONOMIAL, 1, True)


# ---------------------------------------------------------------------------
# per-entry applicability / lhs / rhs

def _odd_prime(mod: Modulus, params) -> bool:
    return mod.is_prime and mod.q % 2 == 1


def _prime_gt3(mod: Modulus, params) -> bool:
    return mod.is_prime and mod.q > 3


def _prime_gt3_unit_n(mod: Modulus, params) -> bool:
    # k = 3 degenerates at p = 3 (a^3 = a), so the cubic identities
    # start at p = 5
    return mod.is_prime and mod.q > 3 and gcd(params.get("n", 1), mod.q) == 1


def _zhang_applies(mod: Modulus, params) -> bool:
    # the displayed formula fails at even q (q = 4: lhs 32, rhs 96);
    # restricted to odd q >= 3 with (n, q) = 1
    return mod.q >= 3 and mod.q % 2 == 1 and gcd(params.get("n", 1), mod.q) == 1


def _zh_applies(mod: Modulus, params) -> bool:
    return mod.is_prime and mod.q > 3 and (mod.q - 1) % 3 != 0


def _salie_rhs(p: int, params) -> int:
    return 2 * p**3 - 3 * p**2 - 3 * p


def _zhang_rhs(q: int, params) -> int:
    mod = as_modulus(q)
    rhs = Fraction(3**mod.omega * q * q * mod.phi)
    for p in mod.unitary_primes:
        rhs *= Fraction(2, 3) - Fraction(1, 3 * p) - Fraction(4, 3 * p * (p - 1))
    if rhs.denominator != 1:
        raise ArithmeticError(f"zhang rhs not an integer at q={q}: {rhs}")
    return int(rhs)


def _zwl_rhs(p: int, params) -> int:
    leg3 = legendre(3, p)
    t = char_sums.salie_twisted_char_sum(p)
    if p % 4 == 3:
        return 2 * p**3 - 6 * p**2 - 5 * p + 2 * leg3 * p**2 - p**2 * t
    return 2 * p**3 - 10 * p**2 - 9 * p - 2 * leg3 * p**2 + p**2 * t


def _nw_rhs(p: int, params) -> int:
    leg3 = legendre(3, p)
    c = char_sums.ning_wang_c(p)
    if p % 4 == 3:
        return 2 * p**3 - 4 * p**2 + 2 * p**2 * leg3 - 5 * p + p**2 * c
    return 2 * p**3 - 8 * p**2 - 2 * p**2 * leg3 - 9 * p + p**2 * c


def _zz_rhs(p: int, params) -> int:
    return 2 * p**3 - p**2 if (p - 1) % 3 != 0 else 2 * p**3 - 7 * p**2


def _zh_rhs(p: int, params) -> int:
    return 5 * p**4 - 8 * p**3 - p**2


def _zm_rhs(p: int, params) -> int:
    if p % 6 == 5:
        return 5 * p**3 * (p - 1)
    d = represent_4p(p).d
    return 5 * p**4 - 23 * p**3 - d * d * p**2


def _wz_rhs(p: int, params) -> int:
    if p % 6 == 5:
        return 7 * (2 * p**5 - 3 * p**4)
    d = represent_4p(p).d
    return 14 * p**5 - 75 * p**4 - 8 * p**3 * d * d


def _mean_lhs(family_of_n, two_k):
    def lhs(mod: Modulus, params) -> tuple[int, float]:
        fam = family_of_n(params.get("n", 1))
        r = power_mean(fam, mod, two_k)
        return r.rounded, r.residual

    return lhs


def _zwl_lhs(mod: Modulus, params) -> tuple[int, float]:
    r = power_mean(_ZWL_FAMILY, mod, 4)
    return r.rounded, r.residual


def _zh_lhs(mod: Modulus, params) -> tuple[int, float]:
    r = power_mean(_ZH_FAMILY, mod, 6)
    return r.rounded, r.residual


def _corollary_lhs(mod: Modulus, params) -> tuple[int, float]:
    return char_sums.corollary1_check(mod.q).difference, 0.0


def _gauss_lhs(mod: Modulus, params) -> tuple[int, float]:
    # second power mean of the Gauss family, plus the per-m magnitude
    # check |S(m,0,2,p)| = sqrt(p) folded into the residual
    p = mod.q
    mags = exp_sums.abs_two_term_all_m(0, 2, p)[1:]
    sqp = p**0.5
    max_rel_dev = float(abs(mags - sqp).max() / sqp)
    total = float((mags**2).sum())
    rounded = round(total)
    residual = max(abs(total - rounded), max_rel_dev)
    return rounded, residual


@dataclass(frozen=True)
class _Entry:
    descriptor: IdentityDescriptor
    applies: callable
    lhs: callable
    rhs: callable


_ENTRIES: dict[str, _Entry] = {}


def _register(identity_id, description, applicability, applies, lhs, rhs, takes_n=False):
    _ENTRIES[identity_id] = _Entry(
        descriptor=IdentityDescriptor(identity_id, description, applicability, takes_n),
        applies=applies,
        lhs=lhs,
        rhs=rhs,
    )


_register(
    "salie_4th",
    "4th power mean of S(m,1;p) over m = 0..p-1 equals 2p^3-3p^2-3p",
    "odd primes p >= 3",
    _odd_prime,
    _mean_lhs(_salie_family, 4),
    _salie_rhs,
)
_register(
    "zhang_composite_4th",
    "4th power mean of S(m,n;q) over a complete residue system of m",
    "odd q >= 3 with gcd(n, q) = 1 (even q fail the displayed formula)",
    _zhang_applies,
    _mean_lhs(_salie_family, 4),
    _zhang_rhs,
    takes_n=True,
)
_register(
    "zwl_4th",
    "4th power mean of sum_a e((m a^2 + abar)/p), ZWL closed form",
    "primes p > 3",
    _prime_gt3,
    _zwl_lhs,
    _zwl_rhs,
)
_register(
    "nw_4th",
    "4th power mean of sum_a e((m a^2 + abar)/p), Ning-Wang closed form",
    "primes p > 3",
    _prime_gt3,
    _zwl_lhs,
    _nw_rhs,
)
_register(
    "corollary1",
    "(-1/p) sum((c^3+c^2+c)/p) minus C(p) equals 2",
    "odd primes p >= 3",
    _odd_prime,
    _corollary_lhs,
    lambda p, params: 2,
)
_register(
    "zz_cubic_4th",
    "4th power mean of sum_a e((m a^3 + n a)/p) over m = 1..p-1",
    "primes p > 3 with gcd(n, p) = 1",
    _prime_gt3_unit_n,
    _mean_lhs(_cubic_family, 4),
    _zz_rhs,
    takes_n=True,
)
_register(
    "zh_cubic_6th_over_a",
    "6th power mean over the linear coefficient a of sum_n e((n^3 + a n)/p)",
    "primes p > 3 with 3 not dividing p-1",
    _zh_applies,
    _zh_lhs,
    _zh_rhs,
)
_register(
    "zm_cubic_6th",
    "6th power mean of sum_a e((m a^3 + n a)/p) over m = 1..p-1",
    "primes p > 3, split by p mod 6",
    _prime_gt3_unit_n,
    _mean_lhs(_cubic_family, 6),
    _zm_rhs,
    takes_n=True,
)
_register(
    "wz_cubic_8th",
    "8th power mean of sum_a e((m a^3 + n a)/p) over m = 1..p-1",
    "primes p > 3, split by p mod 6",
    _prime_gt3_unit_n,
    _mean_lhs(_cubic_family, 8),
    _wz_rhs,
    takes_n=True,
)
_register(
    "gauss_magnitude",
    "2nd power mean of the quadratic Gauss family equals p(p-1), "
    "with every |S(m,0,2,p)| = sqrt(p)",
    "odd primes p >= 3",
    _odd_prime,
    _gauss_lhs,
    lambda p, params: p * (p - 1),
)


def list_identities() -> list[IdentityDescriptor]:
    return [e.descriptor for e in _ENTRIES.values()]


def evaluate(identity_id: str, modulus, params: dict | None = None) -> IdentityOutcome:
    """Evaluate one identity at one modulus; inapplicable moduli yield a
    skip outcome rather than an error."""
    if identity_id not in _ENTRIES:
        raise UnknownIdentityError(identity_id)
    entry = _ENTRIES[identity_id]
    params = dict(params or {})
    mod = as_modulus(modulus)
    if not entry.applies(mod, params):
        return IdentityOutcome(identity_id, mod.q, params, None, None, 0.0, SKIP)
    lhs, residual = entry.lhs(mod, params)
    rhs = entry.rhs(mod.q, params)
    if residual >= RESIDUAL_TOL:
        status = NUMERIC
    elif lhs == rhs:
        status = PASS
    else:
        status = FAIL
    return IdentityOutcome(identity_id, mod.q, params, lhs, rhs, residual, status)


def sweep(
    identity_id: str,
    moduli,
    params_grid: list[dict] | None = None,
    emit_skips: bool = False,
    parallelism: int = 1,
) -> SweepResult:
    """Evaluate an identity over every modulus in `moduli` x every params
    combination, in deterministic (modulus, params) order.

    Inapplicable moduli are dropped unless emit_skips is set (explicit
    single-modulus queries want the skip row; range sweeps do not).
    """
    if identity_id not in _ENTRIES:
        raise UnknownIdentityError(identity_id)
    grid = params_grid if params_grid is not None else [{}]
    jobs = [(int(q), params) for q in moduli for params in grid]

    def run(job):
        return evaluate(identity_id, job[0], job[1])

    if parallelism > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            results = list(pool.map(run, jobs))
    else:
        results = [run(j) for j in jobs]

    out = SweepResult()
    for outcome in results:
        if outcome.status == SKIP and not emit_skips:
            continue
        out.outcomes.append(outcome)
        if outcome.status == PASS:
            out.summary.n_pass += 1
        elif outcome.status == SKIP:
            out.summary.n_skip += 1
        else:
            out.summary.n_fail += 1
        out.summary.max_residual = max(out.summary.max_residual, outcome.residual)
    return out
