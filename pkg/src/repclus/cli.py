"""Command-line front end.

Exit codes: 0 success, 1 domain error (e.g. not a Ptolemy diagram),
2 usage error, 3 unexpected oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional, Sequence

from repclus.classify import NotPtolemyError, classify, torsion_pair_of
from repclus.diagrams import (
    DiagonalSet,
    ext_left_perp,
    ext_right_perp,
    hom_left_perp,
    hom_right_perp,
    parse_set,
    ptolemy_closure,
    ptolemy_violations,
)
from repclus.polygon import PolygonParams, enumerate_diagonals

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_ORACLE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="repclus", description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, help="rank of A_n (>= 1)")
    ap.add_argument("--p", type=int, help="repetition count (>= 1)")
    ap.add_argument("--out", help="write the main output to this file instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("list-diagonals", help="all diagonals in canonical order, one JSON triple per line")

    def with_set(name, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--set", required=True, dest="set_text", help='diagonals "i,j,k;i,j,k;..."')
        return sp

    with_set("check", "classification report plus Ptolemy diagnostics")
    with_set("closure", "smallest Ptolemy diagram containing the set")
    sp = with_set("perp", "Ext or Hom perpendicular set")
    sp.add_argument("--side", choices=("left", "right"), default="right")
    sp.add_argument("--kind", choices=("ext", "hom"), default="ext")
    with_set("torsion-pair", "torsion pair (set, Hom-perp) of a Ptolemy diagram")

    sp = sub.add_parser("enumerate", help="enumerate Ptolemy diagrams, torsion pairs, cluster-tilting or maximal rigid sets")
    sp.add_argument("target", choices=("ptolemy", "torsion-pairs", "cluster-tilting", "maximal-rigid"))
    sp.add_argument("--mode", choices=("powerset", "closure-system", "structural"))
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--orbits", choices=("rho", "shift"))
    sp.add_argument("--cap", type=int, default=28, help="powerset bit cap (default 28)")

    sp = sub.add_parser("quiver", help="AR-quiver export")
    sp.add_argument("--format", choices=("dot", "json"), default="json")
    sp.add_argument("--validate", action="store_true", help="print the mesh check to stderr; exit 1 if it fails")

    sp = sub.add_parser("verify", help="run oracle checks on --n/--p or on the default grid")
    sp.add_argument("oracle", choices=("crossing", "perp", "theorem", "all"))
    sp.add_argument("--max-bits", type=int, default=18, help="grid bound on the diagonal count (default 18)")

    sp = with_set("draw", "draw the set on the repetitive polygon")
    sp.add_argument("--format", choices=("svg", "tikz", "png"), default="svg")
    return ap


def _params(args) -> PolygonParams:
    if args.n is None or args.p is None:
        raise UsageError("--n and --p are required for this command")
    try:
        return PolygonParams(args.n, args.p)
    except ValueError as exc:
        raise UsageError(f"--n/--p: {exc}") from None


def _set(args, P: PolygonParams) -> DiagonalSet:
    try:
        return parse_set(args.set_text, P)
    except ValueError as exc:
        raise UsageError(f"--set: {exc}") from None


def _run(args, emit) -> int:
    cmd = args.command
    if cmd == "verify":
        return _verify(args, emit)
    P = _params(args)

    if cmd == "list-diagonals":
        for d in enumerate_diagonals(P):
            emit(_dumps(d.as_list()))
        return EXIT_OK

    if cmd == "check":
        s = _set(args, P)
        doc = classify(s).to_json()
        doc["violations"] = [v.to_json() for v in ptolemy_violations(s)]
        emit(_dumps(doc))
        return EXIT_OK

    if cmd == "closure":
        emit(_dumps(ptolemy_closure(_set(args, P)).to_json()))
        return EXIT_OK

    if cmd == "perp":
        fn = {
            ("right", "ext"): ext_right_perp,
            ("left", "ext"): ext_left_perp,
            ("right", "hom"): hom_right_perp,
            ("left", "hom"): hom_left_perp,
        }[(args.side, args.kind)]
        emit(_dumps(fn(_set(args, P)).to_json()))
        return EXIT_OK

    if cmd == "torsion-pair":
        s = _set(args, P)
        try:
            pair = torsion_pair_of(s)
        except NotPtolemyError as exc:
            print(_dumps({"error": "NotPtolemy", "violations": [v.to_json() for v in exc.violations]}), file=sys.stderr)
            return EXIT_DOMAIN
        emit(_dumps(pair.to_json()))
        return EXIT_OK

    if cmd == "enumerate":
        return _enumerate(args, P, emit)

    if cmd == "quiver":
        from repclus.quiver import build_ar_quiver, export_quiver, validate_stable_translation

        q = build_ar_quiver(P)
        emit(export_quiver(q, args.format).rstrip("\n"))
        if args.validate:
            rep = validate_stable_translation(q)
            print(_dumps(rep.to_json()), file=sys.stderr)
            return EXIT_OK if rep.ok else EXIT_DOMAIN
        return EXIT_OK

    if cmd == "draw":
        from repclus.draw import draw, render_png

        s = _set(args, P)
        if args.format == "png":
            if not args.out:
                raise UsageError("--format png needs --out")
            render_png(s, args.out)
            return EXIT_OK
        emit(draw(s, args.format).rstrip("\n"))
        return EXIT_OK
    raise UsageError(f"unknown command {cmd!r}")


def _enumerate(args, P: PolygonParams, emit) -> int:
    from repclus.enumeration import CapExceeded, EnumerationRequest, run

    mode = args.mode.replace("-", "_") if args.mode else None
    try:
        req = EnumerationRequest(
            P, args.target.replace("-", "_"), mode, args.count_only, args.orbits, cap_bits=args.cap
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    t0 = time.perf_counter()
    try:
        res = run(req)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    elapsed = time.perf_counter() - t0
    if args.count_only:
        emit(str(res))
        count = res
    else:
        for item in res:
            if isinstance(item, tuple):
                rep, size = item
                emit(_dumps({"representative": rep.to_json(), "orbit_size": size}))
            else:
                emit(_dumps(item.to_json()))
        count = len(res)
    print(
        _dumps({"target": req.target, "mode": req.resolved_mode, "n": P.n, "p": P.p, "count": count,
                "seconds": round(elapsed, 3)}),
        file=sys.stderr,
    )
    return EXIT_OK


def _verify(args, emit) -> int:
    from repclus.oracles import ORACLES, default_grid

    if args.n is not None or args.p is not None:
        grid = [_params(args)]
    else:
        grid = default_grid(args.max_bits)
    names = list(ORACLES) if args.oracle == "all" else [args.oracle]
    failed = False
    for name in names:
        for P in grid:
            rep = ORACLES[name](P)
            emit(_dumps(rep.to_json()))
            failed |= not rep.ok
    return EXIT_ORACLE if failed else EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    lines: list[str] = []
    emit = lines.append if args.out else print
    try:
        code = _run(args, emit)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"repclus: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out and lines:
        with open(args.out, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    return code


def run(argv: Sequence[str]) -> int:
    """Library entry: same as the console script, returning the exit code."""
    try:
        return main(argv)
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
