"""Command-line front end: identity sweeps, conjecture reports, pair
search, and ad-hoc sum evaluation.

Exit codes: 0 all checks passed (skips allowed), 1 identity/invariant
failure, 2 usage error, 3 numerical-residual failure.  Machine output
(JSON/CSV) goes to --output or stdout; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import conjecture as conj
from . import exp_sums, poly_search, registry, reporting
from .arith import primes_in_range
from .char_sums import PolynomialZ

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3

# default sweep ranges for `verify-all`, small enough to finish in seconds
VERIFY_ALL_RANGES = {
    "salie_4th": ("primes", 3, 100),
    "zhang_composite_4th": ("odd", 3, 60),
    "zwl_4th": ("primes", 5, 100),
    "nw_4th": ("primes", 5, 100),
    "corollary1": ("primes", 3, 199),
    "zz_cubic_4th": ("primes", 5, 100),
    "zh_cubic_6th_over_a": ("primes", 5, 100),
    "zm_cubic_6th": ("primes", 5, 100),
    "wz_cubic_8th": ("primes", 5, 100),
    "gauss_magnitude": ("primes", 3, 100),
}


def _default_workers() -> int:
    env = os.environ.get("EXPSUMLAB_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="expsumlab",
        description="Verification lab for exponential-sum and character-sum identities",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=["json", "csv", "text"], default="text")
        p.add_argument("--output", default=None, help="output path (default: stdout)")
        p.add_argument("--workers", type=int, default=None, help="worker count (env: EXPSUMLAB_WORKERS)")

    p = sub.add_parser("verify", help="verify one identity over a modulus range")
    p.add_argument("--identity", required=True)
    p.add_argument("--pmin", type=int, default=None, help="sweep primes from pmin")
    p.add_argument("--pmax", type=int, default=None, help="sweep primes up to pmax (inclusive)")
    p.add_argument("--qmin", type=int, default=None, help="sweep all moduli from qmin")
    p.add_argument("--qmax", type=int, default=None)
    p.add_argument("--q", type=int, default=None, help="single modulus")
    p.add_argument("--n", type=int, action="append", default=None, help="free unit parameter (repeatable)")
    add_common(p)

    p = sub.add_parser("verify-all", help="verify every registry identity at desk scale")
    add_common(p)

    p = sub.add_parser("conjecture", help="power-mean conjecture report")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--pmin", type=int, required=True)
    p.add_argument("--pmax", type=int, required=True)
    add_common(p)

    p = sub.add_parser("search", help="search constant-difference polynomial pairs")
    p.add_argument("--max-degree", type=int, default=2)
    p.add_argument("--coeff-bound", type=int, default=4)
    p.add_argument("--prime-min", type=int, default=3)
    p.add_argument("--prime-max", type=int, default=199)
    p.add_argument("--twisted", action="store_true", help="also pair (-1/p)-twisted signatures")
    add_common(p)

    p = sub.add_parser("sum", help="evaluate one exponential sum")
    p.add_argument("--family", choices=["kloosterman", "two-term", "twisted"], required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--q", type=int, required=True)
    add_common(p)

    return parser


def _outcome_row(o: registry.IdentityOutcome) -> dict:
    return {
        "identity": o.identity_id,
        "modulus": o.modulus,
        "n": o.params.get("n"),
        "lhs": o.lhs,
        "rhs": o.rhs,
        "residual": o.residual,
        "pass": "skip" if o.status == registry.SKIP else (o.status == registry.PASS),
    }


def _finish(args, command, config_echo, rows, summary, text_extra=""):
    fmt = args.format
    if fmt == "json":
        payload = reporting.emit_json(command, config_echo, rows, summary)
    elif fmt == "csv":
        payload = reporting.emit_csv(command, rows)
    else:
        payload = reporting.emit_text(command, rows, summary)
        if text_extra:
            payload += text_extra.encode("utf-8")
    if args.output:
        with open(args.output, "wb") as fh:
            fh.write(payload)
    else:
        sys.stdout.buffer.write(payload)
        sys.stdout.buffer.flush()


def _exit_code(statuses) -> int:
    statuses = list(statuses)
    if any(s == registry.NUMERIC for s in statuses):
        return EXIT_NUMERIC
    if any(s == registry.FAIL for s in statuses):
        return EXIT_FAIL
    return EXIT_OK


def _run_verify(args, workers: int) -> int:
    ident = args.identity
    if ident not in {d.identity_id for d in registry.list_identities()}:
        print(f"unknown identity: {ident}", file=sys.stderr)
        return EXIT_USAGE
    grid = [{"n": n} for n in args.n] if args.n else None
    if args.q is not None:
        result = registry.sweep(ident, [args.q], grid, emit_skips=True, parallelism=workers)
        echo = {"identity": ident, "q": args.q, "n": args.n}
    elif args.pmin is not None and args.pmax is not None:
        moduli = primes_in_range(args.pmin, args.pmax)
        result = registry.sweep(ident, moduli, grid, parallelism=workers)
        echo = {"identity": ident, "pmin": args.pmin, "pmax": args.pmax, "n": args.n}
    elif args.qmin is not None and args.qmax is not None:
        result = registry.sweep(ident, range(args.qmin, args.qmax + 1), grid, parallelism=workers)
        echo = {"identity": ident, "qmin": args.qmin, "qmax": args.qmax, "n": args.n}
    else:
        print("verify needs --q, --pmin/--pmax, or --qmin/--qmax", file=sys.stderr)
        return EXIT_USAGE

    rows = [_outcome_row(o) for o in result.outcomes]
    summary = {
        "pass": result.summary.n_pass,
        "fail": result.summary.n_fail,
        "skip": result.summary.n_skip,
        "max_residual": result.summary.max_residual,
    }
    _finish(args, "verify", echo, rows, summary)
    return _exit_code(o.status for o in result.outcomes)


def _run_verify_all(args, workers: int) -> int:
    rows = []
    statuses = []
    summary = {"pass": 0, "fail": 0, "skip": 0, "max_residual": 0.0}
    for desc in registry.list_identities():
        kind, lo, hi = VERIFY_ALL_RANGES[desc.identity_id]
        if kind == "primes":
            moduli = primes_in_range(lo, hi)
        else:
            moduli = range(lo, hi + 1, 2)
        result = registry.sweep(desc.identity_id, moduli, parallelism=workers)
        for o in result.outcomes:
            rows.append(_outcome_row(o))
            statuses.append(o.status)
        summary["pass"] += result.summary.n_pass
        summary["fail"] += result.summary.n_fail
        summary["skip"] += result.summary.n_skip
        summary["max_residual"] = max(summary["max_residual"], result.summary.max_residual)
    _finish(args, "verify-all", {"ranges": {k: list(v) for k, v in VERIFY_ALL_RANGES.items()}}, rows, summary)
    return _exit_code(statuses)


def _run_conjecture(args, workers: int) -> int:
    if not 1 <= args.k <= conj.MAX_K:
        print(f"--k must be in 1..{conj.MAX_K}", file=sys.stderr)
        return EXIT_USAGE
    report = conj.conjecture_report(args.k, args.pmin, args.pmax, parallelism=workers)
    rows = [
        {
            "p": r.p,
            "k": r.k,
            "value": r.value,
            "catalan": r.catalan,
            "main_term": r.main_term,
            "normalized_residual": r.normalized_residual,
        }
        for r in report.rows
    ]
    cc = report.crosscheck
    n_fail = len(cc.mismatches) if cc.checked else 0
    numeric_fail = report.max_power_mean_residual >= exp_sums.RESIDUAL_TOL
    summary = {
        "pass": len(rows) - n_fail,
        "fail": n_fail,
        "skip": 0,
        "max_residual": report.max_power_mean_residual,
        "max_normalized_residual": report.max_abs_normalized_residual,
        "crosscheck": "ok" if (not cc.checked or cc.all_match) else "mismatch",
    }
    _finish(args, "conjecture", {"k": args.k, "pmin": args.pmin, "pmax": args.pmax}, rows, summary)
    if numeric_fail:
        return EXIT_NUMERIC
    return EXIT_FAIL if n_fail else EXIT_OK


def _run_search(args, workers: int) -> int:
    primes = [p for p in primes_in_range(args.prime_min, args.prime_max) if p > 2]
    try:
        result = poly_search.search_constant_pairs(
            args.max_degree, args.coeff_bound, primes, twisted=args.twisted
        )
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    rows = [
        {
            "c": h.c,
            "f": str(h.f),
            "g": str(h.g),
            "primes_checked": len(h.primes),
            "twisted": h.twisted,
        }
        for h in result.hits
    ]
    summary = {
        "pass": len(result.hits),
        "fail": 0,
        "skip": 0,
        "max_residual": 0.0,
        "polynomials": result.n_polynomials,
        "histogram": {str(c): n for c, n in sorted(result.histogram.items())},
    }
    _finish(args, "search", {
        "max_degree": args.max_degree,
        "coeff_bound": args.coeff_bound,
        "prime_min": args.prime_min,
        "prime_max": args.prime_max,
        "twisted": args.twisted,
    }, rows, summary)
    return EXIT_OK


def _run_sum(args, workers: int) -> int:
    try:
        if args.family == "kloosterman":
            val = exp_sums.kloosterman(args.m, args.n, args.q)
        elif args.family == "two-term":
            val = exp_sums.two_term_sum(args.m, args.n, args.k, args.q)
        else:
            val = exp_sums.twisted_sum(args.m, args.k, args.q)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    rows = [{
        "family": args.family,
        "m": args.m,
        "n": args.n,
        "k": args.k,
        "q": args.q,
        "real": val.real,
        "imag": val.imag,
    }]
    if args.format == "text":
        sign = "+" if val.imag >= 0 else "-"
        out = f"{val.real:.7f} {sign} {abs(val.imag):.7f}i\n"
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(out)
        else:
            sys.stdout.write(out)
    else:
        _finish(args, "sum", {"family": args.family}, rows,
                {"pass": 1, "fail": 0, "skip": 0, "max_residual": 0.0})
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    workers = args.workers if args.workers is not None else _default_workers()
    if workers < 1:
        print("--workers must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    runner = {
        "verify": _run_verify,
        "verify-all": _run_verify_all,
        "conjecture": _run_conjecture,
        "search": _run_search,
        "sum": _run_sum,
    }[args.command]
    return runner(args, workers)


if __name__ == "__main__":
    sys.exit(main())
