"""Command-line front end.

Every verb prints one JSON document on stdout.  Errors go to stderr as
``{"error": {"kind": ..., "message": ...}}`` with a nonzero exit code:

    1  usage error
    2  resource cap (node budget, memory cap, refinement cap)
    3  verification found a counterexample
    4  internal consistency failure
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from diffseq import analysis, bounds, dividing, exactreal, solver
from diffseq.analysis import Certificate
from diffseq.coloring import (
    BeattyColoring,
    ColoringFormatError,
    MemoryCapError,
    PeriodicColoring,
    bits_to_str,
    read_coloring_file,
    write_coloring_file,
)
from diffseq.exactreal import AmbiguousError, ExactRational, format_rational
from diffseq.gapset import GapSet, GapSetError

log = logging.getLogger("diffseq")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RESOURCE = 2
EXIT_COUNTEREXAMPLE = 3
EXIT_INTERNAL = 4

INLINE_BITS_LIMIT = 1 << 16


class UsageError(Exception):
    kind = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int(text: str) -> int:
    """Integers, also in ``1e9`` form."""
    try:
        return int(text)
    except ValueError:
        value = float(text)
        if value != int(value):
            raise argparse.ArgumentTypeError(f"not an integer: {text}") from None
        return int(value)


def _gapset(text: str) -> GapSet:
    try:
        return GapSet.parse(text)
    except GapSetError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="diffseq", description="Diffsequence Ramsey numbers and colorings.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    d = sub.add_parser("delta", help="compute Delta(D, k; r) exactly")
    d.add_argument("--gapset", type=_gapset, required=True)
    d.add_argument("--k", type=_int, required=True)
    d.add_argument("--r", type=_int, default=2)
    d.add_argument("--cap", type=_int, default=4096)
    d.add_argument("--budget", type=_int, default=solver.DEFAULT_BUDGET)
    d.add_argument("--threads", type=_int, default=1)

    b = sub.add_parser("bound", help="evaluate the P_{t,u} lower bounds for powers of two")
    b.add_argument("--k", type=_int, required=True)
    b.add_argument("--t", type=_int)
    b.add_argument("--u", type=_int)
    b.add_argument("--optimize", action="store_true")
    b.add_argument("--certify", action="store_true")

    c = sub.add_parser("certify", help="machine-check refined_bound(k, t, u) with P_{t,u}")
    c.add_argument("--k", type=_int, required=True)
    c.add_argument("--t", type=_int, required=True)
    c.add_argument("--u", type=_int, default=0)
    c.add_argument("--out", type=Path, help="write the certificate JSON here as well")

    col = sub.add_parser("color", help="emit a coloring")
    col.add_argument("--family", required=True,
                     choices=["pt", "ptu", "factorial", "dividing", "rational"])
    col.add_argument("--t", type=_int)
    col.add_argument("--u", type=_int, default=0)
    col.add_argument("--a", help="dividing generator 'prefix|tail', e.g. 1,2,3|2,3")
    col.add_argument("--alpha", help="rational slope p/q for --family rational")
    col.add_argument("--n", type=_int, required=True)
    col.add_argument("--out", type=Path, help="coloring file to write")

    v = sub.add_parser("verify", help="check a coloring file for long monochromatic sequences")
    v.add_argument("--coloring", type=Path, required=True)
    v.add_argument("--gapset", type=_gapset, required=True)
    v.add_argument("--k", type=_int, required=True)
    v.add_argument("--n", type=_int)

    lg = sub.add_parser("longest", help="longest monochromatic diffsequence in a coloring file")
    lg.add_argument("--coloring", type=Path, required=True)
    lg.add_argument("--gapset", type=_gapset, required=True)
    lg.add_argument("--n", type=_int)
    lg.add_argument("--gap-size", type=_int, help="also report the max count of this gap")

    al = sub.add_parser("alpha", help="factorial alpha enclosure and derived quantities")
    al.add_argument("--precision", type=_int, default=8, help="series terms")
    al.add_argument("--floor-parity", type=_int, metavar="M")
    al.add_argument("--scaled", type=_int, metavar="D", help="enclose D*alpha mod 2")
    al.add_argument("--refine-cap", type=_int, default=exactreal.DEFAULT_REFINE_CAP)

    it = sub.add_parser("intervals", help="nested-interval tables for a dividing generator")
    it.add_argument("--a", required=True, help="generator 'prefix|tail'")
    it.add_argument("--t", type=_int, help="table size (default: prefix length)")
    it.add_argument("--n", type=_int, help="also pick alpha good for gaps <= n")
    return p


def parse_command(argv: Sequence[str]) -> argparse.Namespace:
    return build_parser().parse_args(list(argv))


def _generator(text: str) -> GapSet:
    try:
        return GapSet.parse("dividing:" + text)
    except GapSetError as exc:
        raise UsageError(f"--a: {exc}") from None


def _coloring_payload(coloring, n: int, out: Path | None) -> dict:
    payload: dict = {"n": n, "coloring": coloring.describe()}
    if out is not None:
        write_coloring_file(out, coloring, n)
        payload["file"] = str(out)
    elif n <= INLINE_BITS_LIMIT:
        payload["bits"] = bits_to_str(coloring.materialize(n))
    return payload


def _cmd_delta(args) -> tuple[dict, int]:
    res = solver.delta(args.gapset, args.k, args.r, args.cap, budget=args.budget,
                       threads=args.threads)
    code = EXIT_RESOURCE if res.status is solver.Status.INCONCLUSIVE else EXIT_OK
    return res.to_json(), code


def _cmd_bound(args) -> tuple[dict, int]:
    if args.optimize or args.t is None:
        if args.t is not None or args.u is not None:
            raise UsageError("--optimize cannot be combined with --t/--u")
        t = u = None
    else:
        t, u = args.t, args.u if args.u is not None else 0
    report = bounds.bound_report(args.k, t, u, certify=args.certify)
    code = EXIT_OK if report.consistent else EXIT_COUNTEREXAMPLE
    return report.to_json(), code


def _cmd_certify(args) -> tuple[dict, int]:
    res = bounds.certify_bound(args.k, args.t, args.u)
    doc = res.to_json()
    if args.out is not None:
        args.out.write_text(json.dumps(doc, indent=2) + "\n")
    return doc, EXIT_OK if isinstance(res, Certificate) else EXIT_COUNTEREXAMPLE


def _cmd_color(args) -> tuple[dict, int]:
    fam = args.family
    extra: dict = {}
    if fam in ("pt", "ptu"):
        if args.t is None:
            raise UsageError(f"--family {fam} needs --t")
        coloring = PeriodicColoring.thue_morse(args.t, args.u if fam == "ptu" else 0)
    elif fam == "factorial":
        coloring = BeattyColoring(exactreal.factorial_alpha())
    elif fam == "rational":
        if not args.alpha:
            raise UsageError("--family rational needs --alpha p/q")
        coloring = BeattyColoring(ExactRational(exactreal.parse_rational(args.alpha)))
    else:
        if not args.a:
            raise UsageError("--family dividing needs --a")
        construction = dividing.dividing_construction(_generator(args.a), args.n)
        coloring = construction.coloring
        extra = construction.to_json()
    payload = {"family": fam, **_coloring_payload(coloring, args.n, args.out)}
    if extra:
        payload["construction"] = extra
        if args.out is not None:
            sidecar = args.out.with_name(args.out.name + ".json")
            sidecar.write_text(json.dumps(extra, indent=2) + "\n")
            payload["sidecar"] = str(sidecar)
    return payload, EXIT_OK


def _load(path: Path, n: int | None):
    try:
        coloring = read_coloring_file(path)
    except OSError as exc:
        raise UsageError(f"--coloring: {exc}") from None
    if n is None:
        if coloring.limit is None:
            raise UsageError("--n is required for periodic colorings")
        n = coloring.limit
    if coloring.limit is not None and n > coloring.limit:
        raise UsageError(f"--n {n} exceeds the explicit coloring length {coloring.limit}")
    return coloring, n


def _cmd_verify(args) -> tuple[dict, int]:
    if args.k < 2:
        raise UsageError("--k must be at least 2")
    coloring, n = _load(args.coloring, args.n)
    res = analysis.verify_avoidance(coloring, args.gapset, args.k, n)
    if isinstance(res, Certificate):
        doc = res.to_json()
        if doc["coloring"]["type"] == "explicit":
            doc["coloring"] = {"type": "explicit", "file": str(args.coloring)}
        return {"status": "certificate", **doc}, EXIT_OK
    return {"status": "counterexample", "gapset": str(args.gapset), "k": args.k, "n": n,
            "witness": res.to_json()}, EXIT_COUNTEREXAMPLE


def _cmd_longest(args) -> tuple[dict, int]:
    coloring, n = _load(args.coloring, args.n)
    length, witness = analysis.longest_mono(coloring, args.gapset, n)
    doc = {"gapset": str(args.gapset), "n": n, "length": length,
           "witness": witness.to_json() if witness else None}
    if args.gap_size is not None:
        doc["gapSize"] = args.gap_size
        doc["maxGapCount"] = analysis.max_gap_count(coloring, args.gapset, args.gap_size, n)
    return doc, EXIT_OK


def _cmd_alpha(args) -> tuple[dict, int]:
    alpha = exactreal.factorial_alpha(args.precision)
    doc = {"alpha": "1 - sum_{i>=1} 1/(2i)!", "terms": alpha.terms_used,
           "interval": str(alpha.bounds()),
           "tailBound": format_rational(exactreal.tail_bound(alpha.terms_used))}
    if args.floor_parity is not None:
        doc["floorParity"] = {"m": args.floor_parity,
                              "parity": exactreal.floor_parity(alpha, args.floor_parity,
                                                               args.refine_cap)}
    if args.scaled is not None:
        doc["scaledMod2"] = {"d": args.scaled,
                             "interval": str(exactreal.scaled_mod2_range(alpha, args.scaled,
                                                                         args.refine_cap))}
    doc["termsAfterRefinement"] = alpha.terms_used
    return doc, EXIT_OK


def _cmd_intervals(args) -> tuple[dict, int]:
    gen = _generator(args.a)
    reduced = gen.reduce_by_first()
    t = args.t if args.t is not None else max(len(gen.prefix), 1)
    a = reduced.generator_prefix(t)
    table = dividing.build_intervals(a)
    doc = {"generator": str(gen), "reduced": str(reduced), "table": table.to_json(),
           "J": dividing.j_interval(a).to_json()}
    if args.n is not None:
        doc["nested"] = dividing.nested_alpha(reduced, args.n).to_json()
    return doc, EXIT_OK


COMMANDS = {
    "delta": _cmd_delta,
    "bound": _cmd_bound,
    "certify": _cmd_certify,
    "color": _cmd_color,
    "verify": _cmd_verify,
    "longest": _cmd_longest,
    "alpha": _cmd_alpha,
    "intervals": _cmd_intervals,
}


def execute(args: argparse.Namespace) -> tuple[dict, int]:
    return COMMANDS[args.verb](args)


def _fail(kind: str, message: str, code: int) -> int:
    print(json.dumps({"error": {"kind": kind, "message": message}}), file=sys.stderr)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parse_command(argv)
    except UsageError as exc:
        return _fail("usage", str(exc), EXIT_USAGE)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    try:
        doc, code = execute(args)
    except UsageError as exc:
        return _fail("usage", str(exc), EXIT_USAGE)
    except (GapSetError, ColoringFormatError, ValueError) as exc:
        return _fail("usage", str(exc), EXIT_USAGE)
    except (solver.BudgetExceeded, MemoryCapError, AmbiguousError) as exc:
        return _fail(getattr(exc, "kind", "resource cap"), str(exc), EXIT_RESOURCE)
    except dividing.ConstructionError as exc:
        return _fail(exc.kind, str(exc), EXIT_INTERNAL)
    try:
        print(json.dumps(doc, indent=2))
    except BrokenPipeError:
        sys.stderr.close()
    return code


if __name__ == "__main__":
    raise SystemExit(main())
