"""Command-line front end: ``mslab <subcommand> ...``.

Exit status: 0 on success, 1 when a scientific check fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from .bounds import alpha_window, compute_b, gamma_known, in_b_range, upper_bound_sum
from .cache import ResultCache
from .certificates import (
    build_configuration,
    build_partition_systems,
    certified_row_floor,
    verify_configuration,
    verify_partition_systems,
)
from .combinatorics import binomial
from .errors import ConstructionError, HypothesisError, InvariantViolation, MSLabError
from .pac import GreedyFailure, format_pac, greedy_qpac, matching_qpac, verify_qpac
from .reproduce import run_all
from .search import SEARCH_MAX_N, SearchConfig, SearchReport, minimize_phi
from .weights import COUNT_MAX_N, count_dplus, format_string, list_dplus, load_weight_file, make_weight_function

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_CACHE = "mslab-cache.jsonl"
TABLE_MAX_N = 14


class UsageError(Exception):
    pass


def _out(line: str = "") -> None:
    sys.stdout.write(line + "\n")


def cmd_pac(args: argparse.Namespace) -> int:
    if args.format == "paper" and 2 * args.q + 1 > 9:
        raise UsageError("--format paper needs 2q+1 <= 9; use --format tsv")
    if args.method == "matching":
        m = matching_qpac(args.q)
    else:
        try:
            m = greedy_qpac(args.q)
        except GreedyFailure as exc:
            print(f"# {exc}; falling back to matching", file=sys.stderr)
            m = matching_qpac(args.q)
    print(f"# method: {m.method}", file=sys.stderr)
    sys.stdout.write(format_pac(m, args.format))
    return EXIT_OK if verify_qpac(m).ok else EXIT_FAIL


def _read_weights(args: argparse.Namespace):
    if args.weights:
        return load_weight_file(args.weights)
    if args.values:
        return make_weight_function(args.values.replace(",", " ").split())
    raise UsageError("give --weights FILE or --values 'v1 v2 ...'")


def cmd_phi(args: argparse.Namespace) -> int:
    f = _read_weights(args)
    if f.n > COUNT_MAX_N:
        raise UsageError(f"exhaustive counting supports n <= {COUNT_MAX_N}, got n={f.n}")
    _out("n\tr\td\tphi")
    _out(f"{f.n}\t{f.r}\t{args.d}\t{count_dplus(f, args.d, threads=args.threads)}")
    if args.list:
        for S in list_dplus(f, args.d):
            _out(format_string(f, S))
    return EXIT_OK


def bounds_row(n: int, d: int, r: int) -> list[str]:
    if d >= 2 and in_b_range(n, d, r):
        b, upper, ub = str(compute_b(n, d, r)), str(alpha_window(n, d, r)), str(upper_bound_sum(n, d, r))
    else:
        b = upper = ub = "-"
    case = gamma_known(n, d, r)
    gamma, status = (str(case.value), case.status) if case else ("-", "open")
    return [str(n), str(d), str(r), b, upper, ub, gamma, status]


def cmd_bounds(args: argparse.Namespace) -> int:
    _out("n\td\tr\tb\talpha_upper\tupper_bound\tgamma\tstatus")
    _out("\t".join(bounds_row(args.n, args.d, args.r)))
    return EXIT_OK


def _verdict(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def cmd_certify(args: argparse.Namespace) -> int:
    n, d = args.n, args.d
    f = load_weight_file(args.weights) if args.weights else None
    if f is not None and f.n != n:
        raise UsageError(f"weight file has n={f.n}, expected {n}")
    failed = False
    emitted = False
    if d >= 2 and n == 2 * d + 2:
        emitted = True
        c = build_configuration(d)
        res = verify_configuration(c)
        _out(f"certificate\trow-configuration\tpac={c.method}")
        _out(f"size\t{len(c.rows)}")
        _out(f"floor\t{binomial(c.r, d) + binomial(c.r, d - 1)}")
        _out(f"invariant\trow count = C({c.r},{d - 1})\t{_verdict(len(c.rows) == binomial(c.r, d - 1))}")
        _out(f"invariant\trows partition I_n\t{_verdict(res.ok)}")
        failed |= not res.ok
        if f is not None:
            try:
                certified_row_floor(f, c)
                _out("invariant\teach row has a nonnegative d-string\tPASS")
                phi = count_dplus(f, d)
                ok = phi >= binomial(c.r, d) + binomial(c.r, d - 1)
                _out(f"invariant\tphi(f,d) = {phi} >= floor\t{_verdict(ok)}")
                failed |= not ok
            except HypothesisError as exc:
                _out(f"invariant\thypothesis x_k + y_3 < 0\tSKIP ({exc})")
    if d >= 2 and n % d == 0 and n >= d:
        emitted = True
        p = build_partition_systems(n, d)
        res, floor = verify_partition_systems(p, f)
        _out("certificate\tpartition-system")
        _out(f"size\t{len(p.partitions)}")
        _out(f"floor\t{binomial(p.r, d) + floor if res.ok else 0}")
        _out(f"invariant\tpartition count = C({p.r - 1},{d - 2})*{n - p.r}\t{_verdict(len(p.partitions) == p.expected_count)}")
        _out(f"invariant\tblock-disjoint partitions of I_n{' with nonnegative block' if f else ''}\t{_verdict(res.ok)}")
        failed |= not res.ok
    if not emitted:
        raise UsageError(f"no certificate applies to n={n}, d={d} (need n = 2d+2 or d | n)")
    return EXIT_FAIL if failed else EXIT_OK


def _config(args: argparse.Namespace) -> SearchConfig:
    seed = args.sub_seed if args.sub_seed is not None else args.seed
    return SearchConfig(restarts=args.restarts, seed=seed, alpha_steps=args.alpha_steps, local_iters=args.local_iters)


def _cached_search(n: int, d: int, r: int, args: argparse.Namespace) -> SearchReport:
    cfg = _config(args)
    cache = ResultCache(args.cache)
    if not args.force:
        hit = cache.get(n, d, r, cfg)
        if hit is not None:
            return hit
    report = minimize_phi(n, d, r, cfg, threads=args.threads)
    cache.put(report, cfg)
    return report


def _report_line(rep: SearchReport) -> str:
    case = gamma_known(rep.n, rep.d, rep.r)
    known = str(case) if case else "open"
    match = "-" if rep.gamma_known_match is None else str(rep.gamma_known_match).lower()
    values = " ".join(str(v) for v in rep.best_f.values)
    return f"{rep.n}\t{rep.d}\t{rep.r}\t{rep.best_phi}\t{known}\t{match}\t{rep.method}\t{rep.seed}\t{values}"


REPORT_HEADER = "n\td\tr\tbest_phi\tgamma_known\tmatch\tmethod\tseed\tbest_f"


def _check_search_n(n: int) -> None:
    if n > SEARCH_MAX_N:
        raise UsageError(f"search supports n <= {SEARCH_MAX_N}, got n={n}")


def cmd_search(args: argparse.Namespace) -> int:
    _check_search_n(args.n)
    rep = _cached_search(args.n, args.d, args.r, args)
    _out(REPORT_HEADER)
    _out(_report_line(rep))
    return EXIT_OK


def cmd_psi(args: argparse.Namespace) -> int:
    _check_search_n(args.n)
    reports = [_cached_search(args.n, args.d, r, args) for r in range(1, args.n + 1)]
    _out(REPORT_HEADER)
    for rep in reports:
        _out(_report_line(rep))
    best = min(reports, key=lambda rep: (rep.best_phi, rep.r))
    ms = binomial(args.n - 1, args.d - 1)
    _out(f"# psi({args.n},{args.d}) <= {best.best_phi} (r={best.r}); C(n-1,d-1) = {ms}")
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    if not 1 <= args.n_max <= TABLE_MAX_N:
        raise UsageError(f"--n-max must lie in 1..{TABLE_MAX_N}")
    searched = ResultCache(args.cache).best_upper_bounds()
    _out("n\td\tr\tgamma\tsearch_ub")
    for n in range(1, args.n_max + 1):
        for d in range(1, n + 1):
            for r in range(1, n + 1):
                case = gamma_known(n, d, r)
                ub = searched.get((n, d, r))
                _out(f"{n}\t{d}\t{r}\t{case if case else 'open'}\t{'-' if ub is None else ub}")
    return EXIT_OK


def cmd_verify_paper(args: argparse.Namespace) -> int:
    checks = run_all()
    _out("check\texpected\tobserved\tverdict")
    for c in checks:
        _out(c.line())
    overall = all(c.passed for c in checks)
    _out(f"overall\t{_verdict(overall)}")
    return EXIT_OK if overall else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mslab", description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0, help="master seed for randomized commands")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--cache", default=os.environ.get("MSLAB_CACHE", DEFAULT_CACHE), help="JSON-lines results cache")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pac", help="print a q-pairing of almost-complementaries")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--method", choices=("greedy", "matching"), default="greedy")
    p.add_argument("--format", choices=("paper", "tsv"), default="paper")
    p.set_defaults(func=cmd_pac)

    p = sub.add_parser("phi", help="count nonnegative d-subsets of a weight function")
    p.add_argument("--weights", help="weight file")
    p.add_argument("--values", help="values inline, e.g. '1 1 1 -3' or '1/2,-1/2'")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--list", action="store_true", help="also list the subsets in bar notation")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("bounds", help="b(r), alpha window, upper bound and known gamma")
    for name in ("--n", "--d", "--r"):
        p.add_argument(name, type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("certify", help="build and check lower-bound certificates")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--weights", help="weight file to check against the certificate")
    p.set_defaults(func=cmd_certify)

    def search_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--restarts", type=int, default=SearchConfig.restarts)
        p.add_argument("--seed", dest="sub_seed", type=int, default=None)
        p.add_argument("--alpha-steps", type=int, default=SearchConfig.alpha_steps)
        p.add_argument("--local-iters", type=int, default=SearchConfig.local_iters)
        p.add_argument("--force", action="store_true", help="ignore cached results")

    p = sub.add_parser("search", help="search for small phi(f,d) with f+ = r")
    for name in ("--n", "--d", "--r"):
        p.add_argument(name, type=int, required=True)
    search_flags(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("psi", help="search every r and bound psi(n,d) from above")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    search_flags(p)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("table", help="known gamma values with cached search bounds")
    p.add_argument("--n-max", type=int, default=10)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify-paper", help="run the reproduction checks")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads < 1:
        print("mslab: error: --threads must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (InvariantViolation, ConstructionError) as exc:
        print(f"mslab: check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, MSLabError, OSError) as exc:
        print(f"mslab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
