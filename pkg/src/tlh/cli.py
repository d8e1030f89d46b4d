"""Command-line interface.

    tlh f --seq 00                      rational series of a shuffle sequence
    tlh tilde --seq 0110                its normalized polynomial
    tlh fulltwist --n 3 --qmax 6        truncated full-twist series
    tlh hhh0 --n 4 --qmax 8             closed-form Hochschild-zero series
    tlh magic --n 3 --r 1               tableau sum over standard tableaux
    tlh verify --suite all              run verification suites
    tlh specialize --link "T(3,4)" --to sl_n --N 2
    tlh dataset --list | --get KEY      built-in reduced superpolynomials

Global options: --format text|json|latex, --cache PATH (or TLH_CACHE env
var), --threads N.  Output is deterministic: identical invocations produce
byte-identical output regardless of thread count.

Exit status: 0 on success, 1 on a failed check or engine error, 2 on usage
errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import closed_form, links, shuffle, tableaux, verify
from .poly import NonExactDivision, NonIntegralPower, NotASeries, NotPolynomial
from .serialize import ParseError, dumps, parse_poly
from .shuffle import IncompatiblePair, MemoDivergence, MemoTable
from .tableaux import NotInnerCorner

DEFAULT_QMAX = 10

_ENGINE_ERRORS = (
    NonExactDivision,
    NonIntegralPower,
    NotASeries,
    NotPolynomial,
    ParseError,
    IncompatiblePair,
    MemoDivergence,
    NotInnerCorner,
    links.UnknownLink,
    ValueError,
    KeyError,
    OSError,
)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json", "latex"), default="text",
        help="output format (default: text)",
    )
    common.add_argument(
        "--cache", default=None,
        help="memo cache file for sequence computations (env: TLH_CACHE)",
    )
    common.add_argument(
        "--threads", type=int, default=1,
        help="worker threads for verification suites (default: 1)",
    )

    parser = argparse.ArgumentParser(
        prog="tlh",
        description="Exact q,a,t series for torus-link homology.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("f", parents=[common], help="rational series of a sequence")
    p.add_argument("--seq", required=True, help="binary sequence, e.g. 0110")

    p = sub.add_parser("tilde", parents=[common], help="normalized polynomial")
    p.add_argument("--seq", required=True, help="binary sequence, e.g. 0110")

    p = sub.add_parser("fulltwist", parents=[common], help="full-twist series")
    p.add_argument("--n", type=int, required=True, help="strand count")
    p.add_argument("--qmax", type=int, default=DEFAULT_QMAX)

    p = sub.add_parser("hhh0", parents=[common], help="closed-form a=0 series")
    p.add_argument("--n", type=int, required=True, help="strand count")
    p.add_argument("--qmax", type=int, required=True)

    p = sub.add_parser("magic", parents=[common], help="tableau sum")
    p.add_argument("--n", type=int, required=True, help="number of boxes")
    p.add_argument("--r", type=int, required=True, help="full-twist power")

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument(
        "--suite", required=True,
        help="suite name or 'all' (see --suite list)",
    )
    p.add_argument("--max-n", type=int, default=None, dest="max_n")
    p.add_argument(
        "--conjecture-soft", action="store_true",
        help="failed conjectures do not affect the exit status",
    )

    p = sub.add_parser("specialize", parents=[common], help="classical invariants")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--link", help="built-in dataset key, e.g. T(3,4)")
    src.add_argument("--input", help="file with a polynomial (text or json)")
    p.add_argument("--to", choices=("decat", "sl_n"), required=True)
    p.add_argument("--N", type=int, default=None, help="N for --to sl_n")

    p = sub.add_parser("dataset", parents=[common], help="built-in table")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--list", action="store_true")
    mode.add_argument("--get", metavar="KEY")

    return parser


def _cache_path(args) -> str | None:
    # the environment variable wins over the flag
    return os.environ.get("TLH_CACHE") or args.cache or None


def _with_cache(args) -> MemoTable:
    memo = MemoTable()
    path = _cache_path(args)
    if path and os.path.exists(path):
        shuffle.load_cache(path, memo)
    return memo


def _save_cache(args, memo: MemoTable) -> None:
    path = _cache_path(args)
    if path:
        shuffle.save_cache(path, memo)


def _emit(obj, fmt: str) -> int:
    print(dumps(obj, fmt))
    return 0


def _read_input_poly(path: str, fmt: str):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read().strip()
    if fmt == "latex":
        raise ValueError("latex is write-only; use --format text or json")
    return parse_poly(text, fmt)


def _run(args) -> int:
    if args.command == "f":
        memo = _with_cache(args)
        result = shuffle.poincare_series(args.seq, memo)
        _save_cache(args, memo)
        return _emit(result, args.format)

    if args.command == "tilde":
        memo = _with_cache(args)
        result = shuffle.poincare_poly(args.seq, memo)
        _save_cache(args, memo)
        return _emit(result, args.format)

    if args.command == "fulltwist":
        if args.qmax < 0:
            raise ValueError("--qmax must be >= 0")
        memo = _with_cache(args)
        result = shuffle.full_twist_series(args.n, args.qmax, memo)
        _save_cache(args, memo)
        return _emit(result, args.format)

    if args.command == "hhh0":
        return _emit(
            closed_form.hochschild_zero_series(args.n, args.qmax), args.format
        )

    if args.command == "magic":
        return _emit(tableaux.tableau_sum(args.n, args.r), args.format)

    if args.command == "verify":
        if args.suite == "list":
            for name in verify.suite_names():
                print(name)
            return 0
        names = verify.suite_names() if args.suite == "all" else [args.suite]
        threads = max(1, args.threads)
        results = verify.run_suites(names, max_n=args.max_n, threads=threads)
        print(verify.render_results(results))
        return verify.exit_status(results, conjecture_soft=args.conjecture_soft)

    if args.command == "specialize":
        if args.link is not None:
            poly = links.dataset_get(args.link).poly
        else:
            poly = _read_input_poly(args.input, args.format)
        if args.to == "decat":
            return _emit(links.decategorify(poly), args.format)
        if args.N is None:
            raise ValueError("--to sl_n requires --N")
        decat = links.decategorify(poly)
        return _emit(links.sl_specialization(decat, args.N), args.format)

    if args.command == "dataset":
        if args.list:
            for key in links.dataset_keys():
                print(key)
            print("# any T(2,m) with odd m >= 3 resolves via the closed family")
            return 0
        entry = links.dataset_get(args.get)
        if args.format == "json":
            obj = json.loads(dumps(entry.poly, "json"))
            print(json.dumps(
                {"key": entry.key, "source": entry.source, "poly": obj}
            ))
        else:
            print(f"key: {entry.key}")
            print(f"source: {entry.source}")
            print(f"poly: {dumps(entry.poly, args.format)}")
        return 0

    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except _ENGINE_ERRORS as e:
        name = type(e).__name__
        print(f"error: {name}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
