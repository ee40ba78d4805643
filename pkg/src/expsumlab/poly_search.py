"""Search for constant-difference pairs of character-sum signatures.

Enumerates bounded integer polynomials (pruned under shift, reflection
and square scaling -- integer-level transforms that provably preserve
the signature or reproduce an in-bounds representative), computes the
vector of Legendre character sums across a prime list, and groups by a
normalized key so that pairs whose sums differ by a fixed constant land
in the same bucket.  Every emitted hit is re-verified by direct
recomputation; hits are conjectural evidence, never theorems.

A separate twisted mode allows a prime-dependent sign (-1/p) on one side,
the form the corollary's own pair takes.
"""

from __future__ import annotations

import math
from collections import Counter, defaultdict
from dataclasses import dataclass

from .arith import legendre
from .char_sums import FROM_ONE, PolynomialZ, char_sum_poly, legendre_table


@dataclass(frozen=True)
class Signature:
    poly: PolynomialZ
    primes: tuple[int, ...]
    sums: tuple[int, ...]


@dataclass(frozen=True)
class SearchHit:
    f: PolynomialZ
    g: PolynomialZ
    c: int
    primes: tuple[int, ...]
    twisted: bool
    structural_notes: str


@dataclass
class SearchResult:
    hits: list[SearchHit]
    histogram: Counter  # c value -> hit count
    n_polynomials: int


def signature(f: PolynomialZ, primes) -> Signature:
    primes = tuple(primes)
    return Signature(
        poly=f,
        primes=primes,
        sums=tuple(char_sum_poly(f, p, FROM_ONE) for p in primes),
    )


def normalized_key(sig: Signature) -> tuple[int, ...]:
    """Sums with the first entry subtracted; constant-difference pairs
    share a key."""
    if not sig.sums:
        raise ValueError("empty signature")
    base = sig.sums[0]
    return tuple(s - base for s in sig.sums)


def fundamentally_different(f: PolynomialZ, g: PolynomialZ, primes) -> bool:
    """True iff some (f(x)/p) != (g(x)/p) with both symbols nonzero.

    Zeros are excluded so that f and h^2*f (which disagree only at roots
    of h) count as the same polynomial for the search.
    """
    for p in primes:
        table = legendre_table(p)
        for x in range(1, p):
            sf = table[f.eval_mod(x, p)]
            sg = table[g.eval_mod(x, p)]
            if sf != 0 and sg != 0 and sf != sg:
                return True
    return False


def _square_content(f: PolynomialZ) -> int:
    """Largest s with s^2 dividing every coefficient."""
    content = 0
    for c in f.coeffs:
        content = math.gcd(content, c)
    s = 1
    d = 2
    while d * d <= content:
        while content % (d * d) == 0:
            content //= d * d
            s *= d
        d += 1
    return s


def _in_bounds(f: PolynomialZ, coeff_bound: int) -> bool:
    return all(abs(c) <= coeff_bound for c in f.coeffs)


def _order_key(f: PolynomialZ) -> tuple:
    # prefer small representatives: low degree, small coefficients
    return (f.degree, sum(abs(c) for c in f.coeffs), f.coeffs)


def _is_canonical(f: PolynomialZ, coeff_bound: int) -> bool:
    """Keep f only if it is the minimal in-bounds member of its orbit
    under x -> x+t (|t| <= bound), x -> -x, and square scaling."""
    if _square_content(f) > 1:
        return False  # the square-free representative is enumerated instead
    me = _order_key(f)
    for t in range(-coeff_bound, coeff_bound + 1):
        for reflected in (False, True):
            g = f.shift(t)
            if reflected:
                g = g.reflect()
            if g.coeffs[-1] < 0:
                continue  # outside the sign-normalized space
            if g != f and _in_bounds(g, coeff_bound) and _order_key(g) < me:
                return False
    return True


def enumerate_polys(max_degree: int, coeff_bound: int):
    """Deterministic stream of canonical polynomials: degree 1..max_degree,
    coefficients in [-bound, bound], leading coefficient positive."""
    if max_degree < 1 or coeff_bound < 1:
        raise ValueError("need max_degree >= 1 and coeff_bound >= 1")

    def rec(prefix: list[int], remaining: int):
        if remaining == 0:
            yield list(prefix)
            return
        for c in range(-coeff_bound, coeff_bound + 1):
            prefix.append(c)
            yield from rec(prefix, remaining - 1)
            prefix.pop()

    for degree in range(1, max_degree + 1):
        for lead in range(1, coeff_bound + 1):
            for lower in rec([], degree):
                f = PolynomialZ(tuple(lower) + (lead,))
                if _is_canonical(f, coeff_bound):
                    yield f


def _structural_notes(f: PolynomialZ, g: PolynomialZ) -> str:
    return f"deg {f.degree} vs deg {g.degree}"


def _verify_pair(f: PolynomialZ, g: PolynomialZ, primes, c: int, twisted: bool) -> bool:
    """Independent recomputation of both sums at every evidence prime."""
    for p in primes:
        sf = sum(legendre(f(x), p) for x in range(1, p))
        sg = sum(legendre(g(x), p) for x in range(1, p))
        if twisted:
            sf *= legendre(-1, p)
        if sf - sg != c:
            return False
    return True


def search_constant_pairs(
    max_degree: int,
    coeff_bound: int,
    primes,
    twisted: bool = False,
    extra_polys=(),
) -> SearchResult:
    """Find pairs (f, g) of fundamentally different polynomials whose
    character sums differ by the same constant at every evidence prime.

    With twisted=True an additional pass pairs (-1/p)-twisted signatures
    of f against plain signatures of g.  extra_polys lets callers seed
    specific polynomials (e.g. the corollary's quartic, whose
    coefficients may exceed the enumeration bound).
    """
    primes = tuple(primes)
    if len(primes) < 8:
        raise ValueError("evidence prime list must have at least 8 primes")
    polys = list(enumerate_polys(max_degree, coeff_bound))
    for f in extra_polys:
        if f not in polys:
            polys.append(f)
    sigs = [signature(f, primes) for f in polys]

    groups: dict[tuple, list[Signature]] = defaultdict(list)
    for sig in sigs:
        groups[normalized_key(sig)].append(sig)

    hits: list[SearchHit] = []

    def emit(sf: Signature, sg: Signature, is_twisted: bool):
        f, g = sf.poly, sg.poly
        if not fundamentally_different(f, g, primes):
            return
        if is_twisted:
            leg = [legendre(-1, p) for p in primes]
            diffs = {l * a - b for l, a, b in zip(leg, sf.sums, sg.sums)}
            if len(diffs) != 1:
                return
            c = diffs.pop()
        else:
            c = sf.sums[0] - sg.sums[0]
        if not _verify_pair(f, g, primes, c, is_twisted):
            raise AssertionError(f"grouping produced an unsound hit: {f} vs {g}")
        hits.append(SearchHit(f, g, c, primes, is_twisted, _structural_notes(f, g)))

    for key in groups:
        members = sorted(groups[key], key=lambda s: _order_key(s.poly))
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                emit(members[i], members[j], False)

    if twisted:
        twisted_groups: dict[tuple, list[Signature]] = defaultdict(list)
        for sig in sigs:
            leg = [legendre(-1, p) for p in primes]
            tsums = [l * s for l, s in zip(leg, sig.sums)]
            key = tuple(s - tsums[0] for s in tsums)
            twisted_groups[key].append(sig)
        for key, tmembers in sorted(twisted_groups.items()):
            plain = groups.get(key, [])
            for sf in sorted(tmembers, key=lambda s: _order_key(s.poly)):
                for sg in sorted(plain, key=lambda s: _order_key(s.poly)):
                    if sf.poly != sg.poly:
                        emit(sf, sg, True)

    hits.sort(key=lambda h: (h.c, _order_key(h.f), _order_key(h.g), h.twisted))
    return SearchResult(
        hits=hits,
        histogram=Counter(h.c for h in hits),
        n_polynomials=len(polys),
    )
