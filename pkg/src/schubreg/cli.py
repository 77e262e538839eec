"""Command-line entry point: ``schubreg {stats,poly,pipedreams,maxreg,verify}``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Sequence

from . import grothendieck as gr
from . import pipedreams as pd
from . import verify as vf
from .errors import CapExceeded, ParseError
from .perm import (
    Permutation,
    all_perms,
    descents,
    inv,
    inv_code,
    is_dominant,
    is_fireworks,
    is_inverse_fireworks,
    maj,
)
from .poly import SparsePoly
from .rajchgot import (
    SetPartition,
    fireworks_map,
    inverse_fireworks_map,
    raj,
    raj_code,
    set_partition,
    shape,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
FORMULA_MAXREG_CAP = 20
ENUMERATED_MAXREG_CAP = 8


class VerificationFailed(Exception):
    pass


def _tuple(t: Sequence[int]) -> str:
    return "(" + ",".join(map(str, t)) + ")"


def _emit(rows: list[dict[str, Any]], fmt: str, text: str | None = None) -> str:
    if fmt == "json":
        payload: Any = rows[0] if len(rows) == 1 else rows
        return json.dumps(payload, indent=2)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(rows[0]) if rows else [], lineterminator="\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({k: (json.dumps(v) if isinstance(v, (list, dict)) else v) for k, v in r.items()})
        return buf.getvalue().rstrip("\n")
    if text is not None:
        return text
    width = max((len(k) for r in rows for k in r), default=0)
    return "\n".join(f"{k:<{width}}  {v}" for r in rows for k, v in r.items())


def _warn_cap(args) -> None:
    if args.cap is not None:
        print(f"warning: enumeration cap overridden to {args.cap}", file=sys.stderr)


# ---- commands ------------------------------------------------------------------

def stats_record(w: Permutation) -> dict[str, Any]:
    return {
        "perm": str(w),
        "n": w.n,
        "inv": inv(w),
        "inv_code": list(inv_code(w)),
        "descents": sorted(descents(w)),
        "maj": maj(w),
        "raj": raj(w),
        "raj_code": list(raj_code(w)),
        "shape": list(shape(w).parts),
        "set_partition": str(set_partition(w)),
        "fireworks": is_fireworks(w),
        "inverse_fireworks": is_inverse_fireworks(w),
        "dominant": is_dominant(w),
        "phi": str(fireworks_map(w)),
        "phi_inv": str(inverse_fireworks_map(w)),
        "regularity": raj(w) - inv(w),
    }


def cmd_stats(args) -> str:
    rec = stats_record(Permutation.parse(args.perm))
    if args.format != "text":
        return _emit([rec], args.format)
    shown = dict(rec)
    for key in ("inv_code", "raj_code", "shape"):
        shown[key] = _tuple(rec[key])
    shown["descents"] = "{" + ",".join(map(str, rec["descents"])) + "}"
    return _emit([shown], "text")


def _rajpoly(pi: SetPartition, primary: bool) -> SparsePoly:
    # the operator recursion has no size cap, so it serves large n
    small = pi.n <= gr.SINGLE_CAP
    return gr.rajchgot_poly(pi, "definition" if small == primary else "recursion")


def _partition_arg(which: str, arg: str) -> SetPartition:
    if which != "rajpoly":
        raise ParseError("set partitions are only accepted with --which rajpoly", arg, arg.index("|"))
    return SetPartition.parse(arg)


def compute_poly(which: str, arg: str) -> SparsePoly:
    if "|" in arg:
        return _rajpoly(_partition_arg(which, arg), True)
    w = Permutation.parse(arg)
    if which == "groth":
        return gr.groth_single(w)
    if which == "grothxy":
        return gr.groth_double(w)
    if which == "schubert":
        return gr.schubert_single(w)
    if which == "schubertxy":
        return gr.schubert_double(w)
    if which == "cm":
        return gr.cm_single(w)
    if which == "cmxy":
        return gr.cm_double(w)
    if which == "rajpoly":
        return _rajpoly(set_partition(w.inverse()), True)
    raise ValueError(which)


def cross_check_poly(which: str, arg: str, cap: int | None) -> SparsePoly:
    """Recompute the same polynomial by an independent route."""
    if "|" in arg:
        return _rajpoly(_partition_arg(which, arg), False)
    w = Permutation.parse(arg)
    if which == "rajpoly":
        return _rajpoly(set_partition(w.inverse()), False)
    if which in ("grothxy", "cmxy", "schubertxy"):
        if which == "schubertxy":
            return pd.schubert_from_pipes(w, double=True, cap=cap)
        g = pd.groth_from_pipes_double(w, cap=cap)
        return g if which == "grothxy" else g.top_part().scale((-1) ** inv(w))
    if which == "schubert":
        return pd.schubert_from_pipes(w, cap=cap)
    g = pd.groth_from_pipes_single(w, cap=cap)
    if which == "groth":
        return g
    return g.top_part().scale((-1) ** (g.degree() - inv(w)))


def cmd_poly(args) -> str:
    p = compute_poly(args.which, args.perm)
    if args.cross_check:
        _warn_cap(args)
        q = cross_check_poly(args.which, args.perm, args.cap)
        if q != p:
            raise VerificationFailed(f"cross-check mismatch:\n  operators:   {p}\n  independent: {q}")
    if args.format == "text":
        return str(p)
    rec = {"input": args.perm, "which": args.which, "poly": str(p), "terms": len(p)}
    if p:
        rec["degree"] = p.degree()
    return _emit([rec], args.format)


def cmd_pipedreams(args) -> str:
    w = Permutation.parse(args.perm)
    if args.mode == "max":
        p = pd.max_pipe_dream(w)
        rec = {"perm": str(w), "crosses": len(p), "row_counts": list(p.row_counts()),
               "column_counts": list(p.column_counts()), "cells": p.to_json()}
        if args.format != "text":
            return _emit([rec], args.format)
        return "\n".join([p.ascii(), f"crosses        {len(p)}",
                          f"row_counts     {_tuple(p.row_counts())}",
                          f"column_counts  {_tuple(p.column_counts())}"])
    _warn_cap(args)
    pipes = pd.enumerate_pipes(w, cap=args.cap)
    reduced = [p for p in pipes if len(p) == inv(w)]
    if args.mode == "count":
        rec = {"perm": str(w), "reduced": len(reduced), "total": len(pipes)}
        return _emit([rec], args.format)
    if args.format == "json":
        return json.dumps({"perm": str(w), "n": w.n,
                           "pipe_dreams": [{"reduced": len(p) == inv(w), "cells": p.to_json()}
                                           for p in pipes]}, indent=2)
    if args.format == "csv":
        rows = [{"index": k, "reduced": len(p) == inv(w), "crosses": len(p), "cells": p.to_json()}
                for k, p in enumerate(pipes, 1)]
        return _emit(rows, "csv")
    blocks = [f"# {k} {'reduced' if len(p) == inv(w) else 'non-reduced'} ({len(p)} crosses)\n{p.ascii()}"
              for k, p in enumerate(pipes, 1)]
    return "\n\n".join(blocks)


def maxreg_rows(n_max: int, enumerate_: bool) -> list[dict[str, Any]]:
    rows = []
    for n in range(1, n_max + 1):
        value, k = vf.max_regularity_formula(n)
        j = n - vf.binomial(k, 2)
        row: dict[str, Any] = {"n": n, "k": k, "max_regularity": value, "maximizers": vf.binomial(k, j)}
        formula_set = sorted(vf.max_regularity_maximizers(n))
        if enumerate_:
            best, arg = -1, []
            for w in all_perms(n):
                r = raj(w) - inv(w)
                if r > best:
                    best, arg = r, [w]
                elif r == best:
                    arg.append(w)
            if best != value or sorted(arg) != formula_set:
                raise VerificationFailed(f"n={n}: enumeration gives {best} at {len(arg)} permutations")
            row["verified"] = True
        row["maximizer_list"] = [str(w) for w in formula_set]
        rows.append(row)
    return rows


def cmd_maxreg(args) -> str:
    cap = ENUMERATED_MAXREG_CAP if args.enumerate else FORMULA_MAXREG_CAP
    if args.cap is not None:
        _warn_cap(args)
        cap = args.cap
    if args.n_max > cap:
        raise CapExceeded("maxreg", args.n_max, cap)
    rows = maxreg_rows(args.n_max, args.enumerate)
    if args.format == "json":
        return json.dumps(rows, indent=2)
    if args.format == "csv":
        return _emit(rows, "csv")
    head = f"{'n':>3} {'k':>3} {'max_reg':>8} {'count':>6}" + ("  maximizers" if args.enumerate else "")
    lines = [head]
    for r in rows:
        line = f"{r['n']:>3} {r['k']:>3} {r['max_regularity']:>8} {r['maximizers']:>6}"
        if args.enumerate:
            line += "  " + " ".join(r["maximizer_list"])
        lines.append(line)
    return "\n".join(lines)


def cmd_verify(args) -> str:
    names = args.names or list(vf.CHECKS)
    unknown = [n for n in names if n not in vf.CHECKS]
    if unknown:
        raise ParseError(f"unknown check {unknown[0]!r}", " ".join(names), 0)
    n_max = args.n
    force = False
    if args.cap is not None:
        _warn_cap(args)
        force = True
        n_max = args.cap if n_max is None else n_max
    reports = vf.run_checks(names, n_max, jobs=args.jobs, force=force, clamp=not args.names)
    passed = all(r.passed for r in reports)
    if args.format == "json":
        out = json.dumps({"passed": passed, "reports": [r.to_json() for r in reports]}, indent=2)
    elif args.format == "csv":
        out = _emit([{"check": r.check, "n_max": r.n_max, "checked": r.checked,
                      "failures": len(r.failures), "status": "pass" if r.passed else "FAIL",
                      "ms": r.ms} for r in reports], "csv")
    else:
        width = max(len(r.check) for r in reports)
        lines = [f"{'check':<{width}}  {'n':>2}  {'checked':>8}  status  {'ms':>9}"]
        for r in reports:
            extra = ""
            if "counts" in r.summary:
                extra = "  counts " + ",".join(map(str, r.summary["counts"]))
            elif "maxima" in r.summary:
                extra = "  maxima " + ",".join(map(str, r.summary["maxima"]))
            lines.append(f"{r.check:<{width}}  {r.n_max:>2}  {r.checked:>8}  "
                         f"{'pass' if r.passed else 'FAIL':<6}  {r.ms:>9.1f}{extra}")
            for f in r.failures:
                lines.append(f"    input={f['input']} expected={f['expected']} actual={f['actual']}")
        lines.append("all checks passed" if passed else "VERIFICATION FAILED")
        out = "\n".join(lines)
    if not passed:
        raise VerificationFailed(out)
    return out


# ---- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")
    common.add_argument("--cap", type=int, default=None, help="override enumeration caps")
    common.add_argument("--cross-check", action="store_true",
                        help="recompute via an independent route and compare")

    parser = argparse.ArgumentParser(
        prog="schubreg",
        description="Regularity of matrix Schubert varieties, Grothendieck polynomials and pipe dreams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stats", parents=[common], help="permutation statistics")
    p.add_argument("perm")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("poly", parents=[common], help="print a polynomial")
    p.add_argument("perm", help="permutation, or a set partition like 14|26|358|79 for rajpoly")
    p.add_argument("--which", default="groth",
                   choices=("groth", "grothxy", "schubert", "schubertxy", "cm", "cmxy", "rajpoly"))
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("pipedreams", parents=[common], help="enumerate pipe dreams")
    p.add_argument("perm")
    p.add_argument("--mode", choices=("count", "list", "max"), default="count")
    p.set_defaults(func=cmd_pipedreams)

    p = sub.add_parser("maxreg", parents=[common], help="maximum regularity table")
    p.add_argument("n_max", type=int)
    p.add_argument("--enumerate", action="store_true", help="confirm by sweeping S_n")
    p.set_defaults(func=cmd_maxreg)

    p = sub.add_parser("verify", parents=[common], help="run exhaustive checks")
    p.add_argument("names", nargs="*", help=f"checks to run (default all): {', '.join(vf.CHECKS)}")
    p.add_argument("--n", type=int, default=None, help="largest n (default per check)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        print(args.func(args))
    except VerificationFailed as exc:
        print(str(exc))
        return EXIT_FAIL
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
