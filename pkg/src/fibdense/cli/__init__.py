"""Command-line front end: ``fibdense <subcommand> [options]``.

Exit status: 0 on success, 2 for bad input or exceeded limits, 3 when a claim
that is expected to hold fails. Diagnostics go to standard error only.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .. import __version__, density, genfunc, sequences, wordstats
from ..errors import FibDenseError
from ..fibword import DEFAULT_MAX_LEN, build, counts, prefix
from ..sequences import fib
from .claims import CLAIMS, COLUMNS, run_claims
from .output import OutputSpec, emit, format_rows, render_decimal, render_fraction

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CLAIM = 3

ENV_MAX_LEN = "FIBDENSE_MAX_LEN"


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, ...]:
    """``"2..60"``, ``"5"`` or ``"1,3,5"`` -> tuple of ints."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            lo_i, hi_i = int(lo), int(hi)
            if hi_i < lo_i:
                raise UsageError(f"empty range {part!r}")
            out.extend(range(lo_i, hi_i + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise UsageError(f"empty range {text!r}")
    return tuple(out)


def parse_ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def resolve_max_len(flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get(ENV_MAX_LEN)
    if env:
        try:
            return int(env)
        except ValueError as exc:
            raise UsageError(f"{ENV_MAX_LEN}={env!r} is not an integer") from exc
    return DEFAULT_MAX_LEN


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json", "tsv"), default="csv")
    common.add_argument("--decimals", type=int, default=None,
                        help="digits after the point in decimal renderings (0-30)")
    common.add_argument("--max-len", type=int, default=None,
                        help=f"materialization cap in symbols (env {ENV_MAX_LEN}, default 2^26)")
    common.add_argument("--prec", type=int, default=256, help="working precision in bits")
    common.add_argument("--out", type=Path, default=None, help="write output here instead of stdout")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="fibdense", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"fibdense {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("word", parents=[common], help="print FW(k) or its symbol counts")
    p.add_argument("k", type=int)
    p.add_argument("--counts-only", action="store_true")

    p = sub.add_parser("density-table", parents=[common], help="zero/one densities for k = 0..K")
    p.add_argument("k_max", type=int, nargs="?", default=19)

    p = sub.add_parser("ratios", parents=[common], help="ratios of Fibonacci lengths for k = 1..K")
    p.add_argument("k_max", type=int, nargs="?", default=16)

    p = sub.add_parser("claims", parents=[common], help="evaluate published statements")
    p.add_argument("--id", action="append", default=None,
                   help=f"claim id, repeatable or comma separated; one of: {', '.join(CLAIMS)}")
    p.add_argument("--k", default=None, help="k (or n, depth, exponent) range such as 2..60")
    p.add_argument("--lambda", dest="lam", default=None, help="lambda range such as 0..8")
    p.add_argument("--list", action="store_true", help="list claim ids and exit")

    p = sub.add_parser("complexity", parents=[common], help="factor and palindrome counts by length")
    p.add_argument("--length", type=int, default=fib(24), help="Fibonacci prefix length")
    p.add_argument("--max-n", type=int, default=64)
    p.add_argument("--input", type=Path, default=None, help="read a 0/1 word from this file instead")

    p = sub.add_parser("palindromes", parents=[common], help="palindrome counts and their bound")
    p.add_argument("--length", type=int, default=fib(24))
    p.add_argument("--k-max", type=int, default=64)

    p = sub.add_parser("index", parents=[common], help="Sturmian index from partial quotients")
    p.add_argument("--cf", default=None, help="partial quotients a0,a1,... (default: all ones)")
    p.add_argument("--depth", type=int, default=30)
    p.add_argument("--summary", action="store_true", help="one row with ind and ind* only")

    p = sub.add_parser("gf", parents=[common], help="generating-function coefficients")
    p.add_argument("--kind", choices=("lemma22", "kfib", "product", "custom"), default="kfib")
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--lambda", dest="lam", type=int, default=0)
    p.add_argument("--num", default=None, help="custom numerator coefficients, ascending")
    p.add_argument("--den", default=None, help="custom denominator coefficients, ascending")
    p.add_argument("--terms", type=int, default=20)

    p = sub.add_parser("natural-density", parents=[common], help="share of Fibonacci numbers in [1, x]")
    p.add_argument("x", type=int, nargs="*")
    p.add_argument("--powers", default=None, help="use x = 10^j for j in this range")

    p = sub.add_parser("figure-data", parents=[common], help="normalized Fibonacci products for plotting")
    p.add_argument("k_max", type=int, nargs="?", default=24)
    p.add_argument("--lambda", dest="lam", type=int, default=1)
    return parser


def _meta(args: argparse.Namespace) -> dict:
    flags = {}
    for key, value in sorted(vars(args).items()):
        if key in ("command",):
            continue
        if isinstance(value, Path):
            value = str(value)
        flags[key] = value
    return {"version": __version__, "command": args.command, "flags": flags}


def _table(args, spec: OutputSpec, columns, rows) -> int:
    emit(format_rows(columns, rows, spec, _meta(args)), spec)
    return EXIT_OK


def cmd_word(args, spec: OutputSpec) -> int:
    max_len = resolve_max_len(args.max_len)
    if args.counts_only:
        m, n = counts(args.k)
        return _table(args, spec, ["k", "m", "n", "length"], [[args.k, m, n, m + n]])
    word = build(args.k, max_len)
    emit(word.to_ascii(), spec)
    return EXIT_OK


def cmd_density_table(args, spec: OutputSpec) -> int:
    d = spec.decimals
    rows = [[r.k, r.m, r.n, render_decimal(r.df_m, d), render_decimal(r.df_n, d)]
            for r in density.density_table(args.k_max)]
    return _table(args, spec, ["k", "m", "n", "DF_m", "DF_n"], rows)


def cmd_ratios(args, spec: OutputSpec) -> int:
    d = spec.decimals
    rows = [[r.k, *(render_decimal(v, d, trim=True) for v in r.values())]
            for r in density.ratio_table(args.k_max)]
    return _table(args, spec, ["k", "L1", "L2", "L3", "L4", "L5", "L6", "L7"], rows)


def cmd_claims(args, spec: OutputSpec) -> int:
    if args.list:
        rows = [[c.id, c.summary] for c in CLAIMS.values()]
        return _table(args, spec, ["claim", "summary"], rows)
    ids = None
    if args.id:
        ids = [i.strip() for chunk in args.id for i in chunk.split(",") if i.strip()]
    ks = parse_range(args.k) if args.k else None
    lambdas = parse_range(args.lam) if args.lam else None
    try:
        reports = run_claims(ids, ks, lambdas, spec.decimals, args.prec)
    except KeyError as exc:
        raise UsageError(f"unknown claim id: {exc.args[0]}") from exc
    _table(args, spec, COLUMNS, [r.row() for r in reports])
    failed = [r for r in reports if r.failed]
    for r in failed:
        print(f"claim {r.claim} failed for {r.inputs}", file=sys.stderr)
    return EXIT_CLAIM if failed else EXIT_OK


def _word_for(args):
    max_len = resolve_max_len(args.max_len)
    if getattr(args, "input", None) is not None:
        text = args.input.read_text(encoding="ascii").strip()
        if set(text) - {"0", "1"}:
            raise UsageError(f"{args.input} must contain only 0/1 characters")
        if len(text) > max_len:
            raise UsageError(f"{args.input} holds {len(text)} symbols, cap is {max_len}")
        return text.encode("ascii"), None
    if 2 * args.length > max_len:
        raise UsageError(f"stability check needs {2 * args.length} symbols, cap is {max_len}")
    longer = prefix(2 * args.length, max_len)
    return longer[: args.length], longer


def cmd_complexity(args, spec: OutputSpec) -> int:
    word, longer = _word_for(args)
    prof = wordstats.complexity_profile(word, min(args.max_n, len(word)), extended=longer)
    rows = []
    for n in range(prof.max_n + 1):
        stable = None if prof.stabilized is None else prof.stabilized[n]
        rows.append([n, prof.fac[n], prof.pal[n], stable])
    return _table(args, spec, ["n", "fac", "pal", "stabilized"], rows)


def cmd_palindromes(args, spec: OutputSpec) -> int:
    word, longer = _word_for(args)
    depth = args.k_max + args.k_max // 4
    prof = wordstats.complexity_profile(word, depth, extended=longer)
    rows = []
    for k in range(1, args.k_max + 1):
        rep = prof.palindrome_bound(k)
        rows.append([k, prof.pal[k], prof.fac[k + k // 4], render_fraction(rep.rhs), rep.holds])
    return _table(args, spec, ["k", "pal", "fac_wide", "bound", "holds"], rows)


def cmd_index(args, spec: OutputSpec) -> int:
    if args.cf:
        cf = wordstats.ContinuedFraction(parse_ints(args.cf))
    else:
        cf = wordstats.ContinuedFraction.constant(1, args.depth + 2)
    d = spec.decimals
    ind, ind_star = wordstats.sturmian_index(cf, args.depth, args.prec)
    if args.summary:
        return _table(args, spec, ["depth", "ind_partial", "ind_star_partial"],
                      [[args.depth, render_decimal(ind, d), render_decimal(ind_star, d)]])
    history = wordstats.index_history(cf, args.depth)
    q = wordstats.convergent_denominators(cf)
    rows = []
    running = None
    for n, term in enumerate(history):
        running = term if running is None or term > running else running
        rows.append([n, cf[n + 1], q[n], render_fraction(term), render_decimal(term, d),
                     render_decimal(running, d)])
    return _table(args, spec, ["n", "a_next", "q_n", "term_exact", "term", "running_max"], rows)


def cmd_gf(args, spec: OutputSpec) -> int:
    if args.kind == "lemma22":
        gf = genfunc.lemma22_gf(args.t, args.k)
    elif args.kind == "kfib":
        gf = genfunc.kfib_gf(args.k)
    elif args.kind == "product":
        gf = genfunc.product_fib_gf(args.lam)
    else:
        if not args.num or not args.den:
            raise UsageError("--kind custom needs --num and --den")
        gf = genfunc.RationalGF(parse_ints(args.num), parse_ints(args.den))
    coeffs = genfunc.series_coeffs(gf, args.terms)
    rows = [[j, render_fraction(c)] for j, c in enumerate(coeffs)]
    return _table(args, spec, ["index", "value"], rows)


def cmd_natural_density(args, spec: OutputSpec) -> int:
    xs = list(args.x)
    if args.powers:
        xs.extend(10 ** j for j in parse_range(args.powers))
    if not xs:
        raise UsageError("give at least one x or --powers")
    rows = []
    for x in xs:
        dens = density.natural_density_fib(x)
        rows.append([x, int(dens * x), render_fraction(dens),
                     render_decimal(dens, spec.decimals)])
    return _table(args, spec, ["x", "count", "density_exact", "density"], rows)


def cmd_figure_data(args, spec: OutputSpec) -> int:
    d = spec.decimals
    rows = []
    for k in range(1, args.k_max + 1):
        value = density.product_norm(k, args.lam, args.prec)
        rows.append([k, fib(k), fib(k) * fib(k + 1),
                     render_fraction(density.product_norm_exact(k, args.lam)), render_decimal(value, d)])
    return _table(args, spec, ["k", "fib_k", "fib_k_fib_k1", "product_norm_exact", "product_norm"], rows)


COMMANDS = {
    "word": (cmd_word, 12),
    "density-table": (cmd_density_table, 2),
    "ratios": (cmd_ratios, 1),
    "claims": (cmd_claims, 12),
    "complexity": (cmd_complexity, 12),
    "palindromes": (cmd_palindromes, 12),
    "index": (cmd_index, 12),
    "gf": (cmd_gf, 12),
    "natural-density": (cmd_natural_density, 12),
    "figure-data": (cmd_figure_data, 12),
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler, default_decimals = COMMANDS[args.command]
    if args.decimals is None:
        args.decimals = default_decimals
    try:
        spec = OutputSpec(args.format, args.decimals, args.out)
        return handler(args, spec)
    except (FibDenseError, UsageError, ValueError, OSError) as exc:
        print(f"fibdense {args.command}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
