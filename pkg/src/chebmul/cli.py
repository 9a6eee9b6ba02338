"""Command line entry point.

    chebmul mul --method pm-dft a.txt b.txt -o c.txt
    chebmul opcount --sizes 2^1..2^8
    chebmul error --methods direct,pm-dft --sizes 2^1..2^10 --trials 50 --range -50 50
    chebmul bench --sizes 2^1..2^13 --csv times.csv
    chebmul costmodel --sizes 2^1..2^16 --mul-weight 4

Exit status: 0 success, 1 usage error, 2 bad input data, 3 op-count mismatch.
"""

from __future__ import annotations

import argparse
import sys

from . import bench
from .costmodel import COST_METHODS, CostModel, theoretical_cost
from .poly import ChebPoly, MonoPoly, pad_to_common
from .polyio import PolyFileError, read_poly, write_poly

EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_MISMATCH = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _method_list(text: str | None, default, registry) -> list[str]:
    names = list(default) if text is None else [t for t in text.split(",") if t]
    unknown = [m for m in names if m not in registry]
    if unknown:
        raise UsageError(
            f"unknown method(s) {', '.join(unknown)}; choose from: {', '.join(sorted(registry))}"
        )
    return names


def _sizes(text: str) -> list[int]:
    try:
        return bench.parse_sizes(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(records, args, meta) -> None:
    if args.csv:
        with open(args.csv, "w") as fh:
            bench.write_csv(records, fh, meta)
    else:
        bench.write_csv(records, sys.stdout, meta)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="chebmul", description="Polynomial multiplication in Chebyshev basis")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    m = sub.add_parser("mul", help="multiply two polynomial files")
    m.add_argument("--method", required=True)
    m.add_argument("a")
    m.add_argument("b")
    m.add_argument("-o", "--output", required=True)

    def common(sp, sizes_default):
        sp.add_argument("--methods", help="comma separated method names")
        sp.add_argument("--sizes", default=sizes_default, help="'2,4,8' or '2^a..2^b'")
        sp.add_argument("--csv", help="write CSV here instead of stdout")
        sp.add_argument("--seed", type=int, default=bench.DEFAULT_SEED)

    b = sub.add_parser("bench", help="time each method")
    common(b, "2^1..2^10")
    b.add_argument("--trials", type=int, default=5, help="timing samples per point")

    e = sub.add_parser("error", help="mean relative error against the exact product")
    common(e, "2^1..2^10")
    e.add_argument("--trials", type=int, default=50)
    e.add_argument("--range", nargs=2, type=float, default=(-50.0, 50.0), metavar=("LO", "HI"))

    o = sub.add_parser("opcount", help="instrumented operation counts")
    common(o, "2^1..2^8")

    c = sub.add_parser("costmodel", help="closed-form operation counts")
    common(c, "2^1..2^16")
    c.add_argument("--mul-weight", type=float, default=1.0)
    return p


def _cmd_mul(args) -> int:
    fn = bench.METHODS.get(args.method)
    if fn is None:
        raise UsageError(
            f"unknown method {args.method!r}; choose from: {', '.join(sorted(bench.METHODS))}"
        )
    a, b = read_poly(args.a), read_poly(args.b)
    if a.basis != b.basis:
        raise PolyFileError(f"operands use different bases ({a.basis}, {b.basis})")
    wanted = "chebyshev" if args.method in bench.CHEB_METHODS else "monomial"
    if a.basis != wanted:
        raise PolyFileError(f"method {args.method} expects {wanted} inputs, got {a.basis}")
    pa, pb = pad_to_common(a.coeffs, b.coeffs)
    c = fn(pa, pb)
    write_poly(args.output, (ChebPoly if wanted == "chebyshev" else MonoPoly)(c))
    return 0


def _cmd_opcount(args) -> int:
    registry = [*bench.COUNTABLE, *bench.FLOP_BOUND_FACTOR]
    methods = _method_list(args.methods, registry, registry)
    sizes = _sizes(args.sizes)
    if any(n & (n - 1) for n in sizes):
        raise UsageError("opcount sizes must be powers of two")
    records = bench.run_opcount(methods, sizes, seed=args.seed)
    _emit(records, args, {"seed": args.seed})
    failed = 0
    for r in records:
        flag = "match" if r.match else "MISMATCH"
        failed += not r.match
        extra = f" {r.note}" if r.note else ""
        print(f"{r.method:>16} n={r.n:<6} muls={r.muls} adds={r.adds} {flag}{extra}", file=sys.stderr)
    return EXIT_MISMATCH if failed else 0


def _cmd_error(args) -> int:
    methods = _method_list(args.methods, bench.CHEB_METHODS, bench.METHODS)
    lo, hi = args.range
    if not lo < hi:
        raise UsageError("--range needs LO < HI")
    records = bench.run_error(methods, _sizes(args.sizes), trials=args.trials,
                              value_range=(lo, hi), seed=args.seed)
    _emit(records, args, {"seed": args.seed, "range": f"{lo},{hi}"})
    return 0


def _cmd_bench(args) -> int:
    methods = _method_list(args.methods, bench.CHEB_METHODS, bench.METHODS)
    records = bench.run_bench(methods, _sizes(args.sizes), reps=args.trials, seed=args.seed)
    _emit(records, args, {"seed": args.seed})
    return 0


def _cmd_costmodel(args) -> int:
    methods = _method_list(args.methods, COST_METHODS, COST_METHODS)
    try:
        model = CostModel(args.mul_weight)
        records = bench.run_costmodel(methods, _sizes(args.sizes), model)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(records, args, {"mul_weight": args.mul_weight})
    for r in records:
        if "direct" in methods:
            _, _, base = theoretical_cost("direct", r.n, model)
            _, _, cost = theoretical_cost(r.method, r.n, model)
            print(f"{r.method:>16} n={r.n:<6} speedup vs direct {base / cost:.3f}", file=sys.stderr)
    return 0


COMMANDS = {
    "mul": _cmd_mul,
    "opcount": _cmd_opcount,
    "error": _cmd_error,
    "bench": _cmd_bench,
    "costmodel": _cmd_costmodel,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"chebmul: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PolyFileError, OSError) as exc:
        print(f"chebmul: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
