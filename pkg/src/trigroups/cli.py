"""Command-line front end: ``trigroups <subcommand> ...``.

Exit status 0 means success, 1 a failed verification or empty result, and
2 a usage error (bad flags, malformed words or lists).
"""

from __future__ import annotations

import argparse
import logging
import sys

from . import repcheck
from .search import (
    MAX_ADMISSIBLE_LEN,
    SearchParams,
    format_report,
    run_search,
    search_all,
    verify_table1,
)
from .smallcancel import (
    PieceIndex,
    find_decomposition,
    interval_alphas,
    parse_decomposition,
    verify_decomposition,
    verify_table2,
)
from .trace import bound_constants, classify_elementary, figure_data, trace_poly
from .words import (
    WordReductionError,
    WordSyntaxError,
    canonicalize,
    format_blocks,
    from_blocks,
    parse_blocks,
    parse_interval,
    parse_word,
    print_word,
)


class UsageError(Exception):
    pass


def _word_arg(args) -> object:
    if getattr(args, "word", None):
        return parse_word(args.word)
    if getattr(args, "blocks", None):
        return from_blocks(parse_blocks(args.blocks))
    raise UsageError("give --word or --blocks")


def cmd_trace(args, out) -> int:
    w = _word_arg(args)
    tp = trace_poly(w)
    form = classify_elementary(tp)
    out.write(f"word {print_word(w)}\n")
    out.write(f"tau {tp.pretty()}\n")
    out.write(f"coeffs {tp.to_list_str()}\n")
    out.write(f"elementary {form}\n" if form else "not elementary\n")
    return 0


def cmd_canon(args, out) -> int:
    out.write(format_blocks(canonicalize(parse_blocks(args.blocks)).lengths) + "\n")
    return 0


def _write(text: str, path: str | None, out) -> None:
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    out.write(text)


def cmd_search(args, out) -> int:
    p = SearchParams(
        args.c, args.e, workers=args.workers, screen=args.screen,
        tolerance=args.tolerance, force=args.force, huge=args.huge,
    )
    report = run_search(p, checkpoint=args.checkpoint)
    _write(format_report(report, timing=not args.no_timing), args.out, out)
    return 0 if report.hits else 1


def cmd_search_all(args, out) -> int:
    reports = search_all(args.max_len, workers=args.workers, screen=args.screen, huge=args.huge)
    text = "".join(format_report(r, timing=not args.no_timing) for r in reports)
    _write(text, args.out, out)
    return 0


def cmd_pieces(args, out) -> int:
    w = parse_word(args.word)
    iv = parse_interval(args.interval)
    frag = interval_alphas(w, iv)
    index = PieceIndex(w)
    n = len(index.completions(frag))
    kind = "piece" if index.is_piece(frag) else "non-piece"
    out.write(f"{iv} [{print_word(frag)}] {kind} completions={n}\n")
    return 0


def cmd_decompose(args, out) -> int:
    w = parse_word(args.word)
    if args.check:
        d = parse_decomposition(args.check)
        v = verify_decomposition(w, d, count=args.factors, min_len=args.min, even=args.even)
        out.write(("PASS " if v else "FAIL ") + str(d) + "\n")
        for reason in v.reasons:
            out.write(f"  {reason}\n")
        return 0 if v else 1
    d = find_decomposition(w, count=args.factors, min_len=args.min, even=args.even)
    if d is None:
        out.write("none\n")
        return 1
    ivs = " ".join(str(iv) for iv in d.intervals())
    out.write(f"{d}\nintervals {ivs}\n")
    return 0


def _verify_table1(out) -> bool:
    ok = True
    for rc in verify_table1():
        out.write(f"{'PASS' if rc.passed else 'FAIL'} table1 row {rc.n}: {rc.detail}\n")
        ok &= rc.passed
    return ok


def _verify_table2(out) -> bool:
    ok = True
    for n, passed, detail in verify_table2():
        out.write(f"{'PASS' if passed else 'FAIL'} table2 row {n}: {detail}\n")
        ok &= passed
    return ok


def _verify_bounds(out) -> bool:
    b = bound_constants()
    for label, value in b.rows():
        out.write(f"INFO bounds {label} = {value:.6f}\n")
    for label, holds in b.inequalities.items():
        out.write(f"{'PASS' if holds else 'FAIL'} bounds {label}\n")
    return b.all_hold


def _verify_repcheck(out) -> bool:
    ok = True
    for result in repcheck.verify_all():
        for line in result.lines():
            out.write(line + "\n")
        ok &= result.passed
    return ok


_SUITES = {
    "table1": _verify_table1,
    "table2": _verify_table2,
    "bounds": _verify_bounds,
    "repcheck": _verify_repcheck,
}


def cmd_verify(args, out) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    ok = True
    for name in names:
        ok &= _SUITES[name](out)
    out.write("ALL PASS\n" if ok else "SOME CHECKS FAILED\n")
    return 0 if ok else 1


def cmd_figure_data(args, out) -> int:
    rows = figure_data(args.which, args.start, args.stop, args.step)
    text = "x,y\n" + "".join(f"{x:.10g},{y:.10g}\n" for x, y in rows)
    _write(text, args.out, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="trigroups", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("trace", help="trace polynomial and its elementary form")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--word")
    g.add_argument("--blocks")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("canon", help="dihedral canonical form of a block list")
    p.add_argument("--blocks", required=True)
    p.set_defaults(func=cmd_canon)

    def search_flags(p):
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--screen", choices=("exact", "float", "none"), default="exact")
        p.add_argument("--out")
        p.add_argument("--huge", action="store_true", help=f"allow lengths above 33 (up to {MAX_ADMISSIBLE_LEN})")
        p.add_argument("--no-timing", action="store_true")

    p = sub.add_parser("search", help="search one (c, e)")
    p.add_argument("--c", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--tolerance", type=float, default=1e-6)
    p.add_argument("--force", action="store_true", help="allow (c, e) outside the admissible region")
    p.add_argument("--checkpoint", help="checkpoint file (huge searches only)")
    search_flags(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("search-all", help="search every admissible (c, e) up to a length")
    p.add_argument("--max-len", type=int, default=25)
    search_flags(p)
    p.set_defaults(func=cmd_search_all)

    p = sub.add_parser("pieces", help="is a cyclic interval a piece?")
    p.add_argument("--word", required=True)
    p.add_argument("--interval", required=True, help="I..J, hexadecimal, 0-based")
    p.set_defaults(func=cmd_pieces)

    p = sub.add_parser("decompose", help="find or check a non-piece factorisation")
    p.add_argument("--word", required=True)
    p.add_argument("--factors", type=int, default=3)
    p.add_argument("--min", type=int, default=8)
    p.add_argument("--even", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--check", help="factorisation to verify, e.g. '[(xy)^4]·[...]·[...]'")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", help="run a built-in verification suite")
    p.add_argument("suite", choices=("table1", "table2", "bounds", "repcheck", "all"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("figure-data", help="CSV samples of f, g or sigma0")
    p.add_argument("--which", choices=("f", "g", "sigma0"), required=True)
    p.add_argument("--from", dest="start", type=float, required=True)
    p.add_argument("--to", dest="stop", type=float, required=True)
    p.add_argument("--step", type=float, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_figure_data)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args, out)
    except (WordSyntaxError, WordReductionError, UsageError, ValueError) as exc:
        sys.stderr.write(f"trigroups: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
