"""Command line entry point: ``assprime <command> ...``.

Every command prints one JSON run report on stdout.  Errors go to stderr and
select the exit code: 2 usage, 3 parse, 4 resource guard, 5 a proven identity
failed on a concrete instance (a bug in this package).
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Optional

from . import __version__
from .ass import ass_module, ass_profile
from .errors import AssPrimeError, TheoremViolation
from .fuzz import MODES, default_jobs, run_fuzz
from .gbexamples import example_names, named_example
from .parsing import parse_ideal_file
from .persistence import (
    persistence_check,
    persistence_transfer_check,
    ratliff_rush,
    socle_colon_check,
    strong_persistence_check,
)
from .registry import case_names, run_case
from .serialize import SCHEMA, dumps, run_report
from .sums import (
    asymptotic_ass_sum,
    disjoint_intersection_check,
    verify_decomposition,
    verify_sum_formula_range,
)


class _Context:
    """Collects the file texts that go into the inputs digest."""

    def __init__(self):
        self.inputs: list = []
        self.caveats: list = []

    def read(self, path: str) -> str:
        text = Path(path).read_text(encoding="utf-8")
        self.inputs.append(text)
        return text

    def ideal(self, path: str, name: str):
        return parse_ideal_file(self.read(path)).monomial_ideal(name)


def _pair(ctx: _Context, args):
    return ctx.ideal(args.file_a, args.left), ctx.ideal(args.file_b, args.right)


def cmd_ass(ctx, args):
    prof = ass_profile(ctx.ideal(args.file, args.ideal), args.n)
    ctx.caveats.append("windowed")
    return prof


def cmd_ass_module(ctx, args):
    text = ctx.read(args.file)
    parsed = parse_ideal_file(text)
    U = parsed.monomial_ideal(args.upper)
    V = parsed.monomial_ideal(args.lower)
    return {"upper": U, "lower": V, "ass": ass_module(U, V, method=args.method)}


def cmd_sum_verify(ctx, args):
    I, J = _pair(ctx, args)
    reports = verify_sum_formula_range(I, J, args.n)
    bad = [r.n for r in reports if not r.match]
    if bad:
        raise TheoremViolation(f"formula differs from direct value at n={bad}")
    return reports


def cmd_sum_asymptotic(ctx, args):
    I, J = _pair(ctx, args)
    rep = asymptotic_ass_sum(I, J, args.window)
    ctx.caveats.append("windowed")
    if rep.status == "violated":
        raise TheoremViolation(f"asymptotic description fails: {rep}")
    return rep


def cmd_decomp_verify(ctx, args):
    I, J = _pair(ctx, args)
    holds = [verify_decomposition(I, J, n, args.dmax) for n in range(1, args.n + 1)]
    meet = disjoint_intersection_check(I, J)
    if not all(holds) or not meet:
        raise TheoremViolation(f"decomposition fails: holds={holds}, I cap J == IJ: {meet}")
    return {"n": args.n, "dmax": args.dmax, "holds": holds, "intersection_is_product": meet}


def cmd_persistence(ctx, args):
    I = ctx.ideal(args.file, args.ideal)
    ctx.caveats.append("windowed")
    if args.transfer:
        if not args.right:
            raise AssPrimeError("--transfer needs --right")
        J = ctx.ideal(args.transfer, args.right)
        rep = persistence_transfer_check(I, J, args.max_n)
        if rep.status == "violation":
            raise TheoremViolation(f"persistence does not transfer: {rep}")
        return rep
    out = {"persistence": persistence_check(I, args.max_n)}
    if args.strong:
        out["strong"] = strong_persistence_check(I, args.max_n)
    return out


def cmd_ratliff_rush(ctx, args):
    return ratliff_rush(ctx.ideal(args.file, args.ideal), cap=args.cap)


def cmd_socle_check(ctx, args):
    verdicts = socle_colon_check(ctx.ideal(args.file, args.ideal), args.max_n)
    if not all(verdicts):
        raise TheoremViolation(f"I^n : m not inside I^(n-1): {verdicts}")
    return {"n": list(range(2, args.max_n + 1)), "holds": verdicts}


def cmd_gb_example(ctx, args):
    rep = named_example(args.name, characteristic=args.char, dmax=args.dmax)
    ctx.caveats.extend(rep.caveats)
    return rep


def cmd_fuzz(ctx, args):
    ctx.inputs.append(f"{args.mode}:{args.seed}:{args.count}:{args.max_vars}:"
                      f"{args.max_gens}:{args.max_deg}:{args.max_n}")
    summary = run_fuzz(args.mode, args.seed, args.count, args.max_vars, args.max_gens,
                       args.max_deg, args.max_n, jobs=args.jobs)
    if args.max_n > 1:
        ctx.caveats.append("windowed")
    return summary


def cmd_reproduce(ctx, args):
    if args.case is None or args.list:
        return {"cases": case_names()}
    ctx.inputs.append(args.case)
    return run_case(args.case)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="assprime", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version",
                   version=f"assprime {__version__} (schema {SCHEMA})")
    p.add_argument("-o", "--output", help="write the report here instead of stdout")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    s = sub.add_parser("ass", help="associated primes of A/I^n and I^(n-1)/I^n")
    s.add_argument("file")
    s.add_argument("--ideal", required=True)
    s.add_argument("-n", type=int, default=1)
    s.set_defaults(func=cmd_ass)

    s = sub.add_parser("ass-module", help="associated primes of U/V")
    s.add_argument("file")
    s.add_argument("--upper", required=True)
    s.add_argument("--lower", required=True)
    s.add_argument("--method", choices=["socle", "box"], default="socle")
    s.set_defaults(func=cmd_ass_module)

    def pair_args(s):
        s.add_argument("file_a")
        s.add_argument("file_b")
        s.add_argument("--left", required=True)
        s.add_argument("--right", required=True)

    s = sub.add_parser("sum-verify", help="closed formula against direct computation")
    pair_args(s)
    s.add_argument("-n", type=int, default=1)
    s.set_defaults(func=cmd_sum_verify)

    s = sub.add_parser("sum-asymptotic", help="windowed asymptotic check for I + J")
    pair_args(s)
    s.add_argument("--window", type=int, default=6)
    s.set_defaults(func=cmd_sum_asymptotic)

    s = sub.add_parser("decomp-verify", help="degreewise decomposition of (I+J)^(n-1)/(I+J)^n")
    pair_args(s)
    s.add_argument("-n", type=int, default=1)
    s.add_argument("--dmax", type=int, default=10)
    s.set_defaults(func=cmd_decomp_verify)

    s = sub.add_parser("persistence", help="Ass(A/I^n) <= Ass(A/I^(n+1)) on a window")
    s.add_argument("file")
    s.add_argument("--ideal", required=True)
    s.add_argument("--max-n", type=int, default=4)
    s.add_argument("--strong", action="store_true", help="also test I^(n+1) : I == I^n")
    s.add_argument("--transfer", metavar="FILE_B", help="check that I + J stays persistent")
    s.add_argument("--right", help="ideal name in FILE_B")
    s.set_defaults(func=cmd_persistence)

    s = sub.add_parser("ratliff-rush", help="iterated colon closure")
    s.add_argument("file")
    s.add_argument("--ideal", required=True)
    s.add_argument("--cap", type=int, default=10)
    s.set_defaults(func=cmd_ratliff_rush)

    s = sub.add_parser("socle-check", help="I^n : m <= I^(n-1) for n = 2..max-n")
    s.add_argument("file")
    s.add_argument("--ideal", required=True)
    s.add_argument("--max-n", type=int, default=4)
    s.set_defaults(func=cmd_socle_check)

    s = sub.add_parser("gb-example", help="run a registered polynomial example")
    s.add_argument("name", choices=example_names())
    s.add_argument("--char", type=int)
    s.add_argument("--dmax", type=int)
    s.set_defaults(func=cmd_gb_example)

    s = sub.add_parser("fuzz", help="seeded differential checks over the random corpus")
    s.add_argument("--mode", choices=sorted(MODES), default="sum-verify")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--max-vars", type=int, default=3)
    s.add_argument("--max-gens", type=int, default=4)
    s.add_argument("--max-deg", type=int, default=4)
    s.add_argument("--max-n", type=int, default=4)
    s.add_argument("--jobs", type=int, default=None,
                   help="worker processes (default $ASSPRIME_JOBS or 1)")
    s.set_defaults(func=cmd_fuzz)

    s = sub.add_parser("reproduce", help="run a stored reproduction case")
    s.add_argument("case", nargs="?", choices=case_names())
    s.add_argument("--list", action="store_true")
    s.set_defaults(func=cmd_reproduce)
    return p


def _emit(text: str, output: Optional[str]):
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def main(argv: Optional[list] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    if getattr(args, "jobs", None) is None and args.command == "fuzz":
        args.jobs = default_jobs()
    ctx = _Context()
    start = time.perf_counter()
    try:
        result = args.func(ctx, args)
    except OSError as exc:
        print(f"assprime: {exc}", file=sys.stderr)
        return 2
    except AssPrimeError as exc:
        print(f"assprime: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    elapsed = (time.perf_counter() - start) * 1000
    report = run_report(argv, ctx.inputs, result, elapsed, ctx.caveats)
    _emit(dumps(report), args.output)
    if args.command == "fuzz" and result.failed:
        return TheoremViolation.exit_code
    if args.command == "reproduce" and isinstance(result, dict) and result.get("passed") is False:
        return 1
    return 0
