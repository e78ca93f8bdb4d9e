"""Command-line frontend: dimension sweeps, cross-checks, exports.

Exit codes form the scripting contract:

    0  success / all requested methods agree
    1  mathematical mismatch between methods (the falsification channel)
    2  usage or parse error (bad flags, malformed files, empty grid)
    3  structurally valid but invalid input object (e.g. not a cocycle)

The modular-rank primes can be overridden with COLORFIL_PRIMES="p,q".
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .algebra import AlgebraFormatError, InvalidParams, build_model, from_json_dict
from .cohomology import (ALL_BLOCKS, BlockKind, block_dims, cochain_from_json,
                         cocycle_basis_json)
from .deformation import (CharacteristicVectorViolation, NotACocycle, deform,
                          filiform_check, is_integrable)
from .formulas import (METHOD_BRUTE, METHOD_CLOSED, METHOD_WEIGHTS,
                       DimensionReport, main_theorem_total)
from .weights import count_weight_dim

METHOD_ALIASES = {
    "closed": METHOD_CLOSED, "closed_form": METHOD_CLOSED,
    "brute": METHOD_BRUTE, "brute_force": METHOD_BRUTE,
    "weights": METHOD_WEIGHTS, "weight_oracle": METHOD_WEIGHTS,
}

USAGE_ERROR = 2
MISMATCH_ERROR = 1
INVALID_OBJECT_ERROR = 3


def _parse_range(text: str) -> range:
    """Inclusive integer range: "4" or "1..8"."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected INT or LO..HI, got {text!r}") from None


def _parse_methods(text: str) -> list:
    methods = []
    for part in text.split(","):
        part = part.strip().lower()
        if part not in METHOD_ALIASES:
            raise argparse.ArgumentTypeError(
                f"unknown method {part!r} (choose from closed, brute, weights)")
        canon = METHOD_ALIASES[part]
        if canon not in methods:
            methods.append(canon)
    if not methods:
        raise argparse.ArgumentTypeError("at least one method required")
    return methods


def compute_report(n: int, m: int, p: int, method: str,
                   allow_x0_target: bool = False) -> DimensionReport:
    """One DimensionReport at (n, m, p) from the requested method."""
    if method == METHOD_CLOSED:
        return main_theorem_total(n, m, p)
    if method == METHOD_BRUTE:
        dims = block_dims(build_model(n, m, p), allow_x0_target=allow_x0_target)
        named = {b.name: d for b, d in dims.items()}
        return DimensionReport(n=n, m=m, p=p, method=METHOD_BRUTE, **named)
    if method == METHOD_WEIGHTS:
        return DimensionReport(
            n=n, m=m, p=p, method=METHOD_WEIGHTS,
            A=count_weight_dim(BlockKind.A, n, m, p),
            B=count_weight_dim(BlockKind.B, n, m, p),
            C=count_weight_dim(BlockKind.C, n, m, p))
    raise ValueError(f"unknown method {method!r}")


def _grid_point(args) -> tuple:
    n, m, p, methods = args
    return (n, m, p), {method: compute_report(n, m, p, method) for method in methods}


def _open_output(path):
    if path in (None, "-"):
        return sys.stdout, False
    return open(path, "w", encoding="utf-8"), True


# -- dims ---------------------------------------------------------------


def cmd_dims(args) -> int:
    try:
        for method in args.method:
            report = compute_report(args.n, args.m, args.p, method,
                                    allow_x0_target=args.allow_x0_target)
            print(json.dumps(report.to_json_dict()))
    except (InvalidParams, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    return 0


# -- verify -------------------------------------------------------------


def run_verify(points, methods, jobs: int = 1):
    """Compute all methods on all grid points; returns (rows, mismatches).

    Rows are per (point, block) comparison dicts in deterministic
    (n, m, p, block) order; grid points are independent, so they can be
    computed concurrently and merged afterwards.
    """
    tasks = [(n, m, p, methods) for (n, m, p) in points]
    if jobs > 1 and len(tasks) > 1:
        try:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                results = dict(pool.map(_grid_point, tasks, chunksize=4))
        except (OSError, PermissionError):  # no subprocess support: run serial
            results = dict(map(_grid_point, tasks))
    else:
        results = dict(map(_grid_point, tasks))

    rows = []
    mismatches = []
    for point in sorted(results):
        reports = results[point]
        n, m, p = point
        for block in ALL_BLOCKS:
            values = {method: getattr(reports[method], block.name)
                      for method in methods}
            present = [v for v in values.values() if v is not None]
            agree = len(set(present)) <= 1
            row = {"n": n, "m": m, "p": p, "block": block.name}
            row.update({method: values[method] for method in methods})
            row["agree"] = agree
            rows.append(row)
            if not agree:
                mismatches.append(row)
    return rows, mismatches


def _emit_rows(rows, methods, fmt: str, stream) -> None:
    if fmt == "json":
        json.dump(rows, stream, indent=2)
        stream.write("\n")
        return
    header = ["n", "m", "p", "block", *methods, "agree"]
    stream.write(",".join(header) + "\n")
    for row in rows:
        cells = [str(row[h]) if row[h] is not None else "" for h in header[:-1]]
        cells.append("true" if row["agree"] else "false")
        stream.write(",".join(cells) + "\n")


def cmd_verify(args) -> int:
    points = [(n, m, p) for n in args.n for m in args.m for p in args.p]
    if not points:
        print("error: empty parameter grid", file=sys.stderr)
        return USAGE_ERROR
    if min(n for n, _, _ in points) < 1:
        print("error: n must be >= 1", file=sys.stderr)
        return USAGE_ERROR
    jobs = args.jobs if args.jobs > 0 else (os.cpu_count() or 1)
    rows, mismatches = run_verify(points, args.methods, jobs=jobs)
    stream, close = _open_output(args.output)
    try:
        _emit_rows(rows, args.methods, args.format, stream)
    finally:
        if close:
            stream.close()
    if mismatches:
        print(f"{len(mismatches)} mismatching block(s):", file=sys.stderr)
        for row in mismatches:
            detail = " ".join(f"{m}={row[m]}" for m in args.methods if row[m] is not None)
            print(f"  n={row['n']} m={row['m']} p={row['p']} block={row['block']} {detail}",
                  file=sys.stderr)
        return MISMATCH_ERROR
    return 0


# -- cocycles -----------------------------------------------------------


def cmd_cocycles(args) -> int:
    try:
        block = BlockKind[args.block]
    except KeyError:
        print(f"error: unknown block {args.block!r} (A-F)", file=sys.stderr)
        return USAGE_ERROR
    try:
        alg = build_model(args.n, args.m, args.p)
    except InvalidParams as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    doc = cocycle_basis_json(alg, block, allow_x0_target=args.allow_x0_target)
    stream, close = _open_output(args.out)
    try:
        json.dump(doc, stream, indent=2)
        stream.write("\n")
    finally:
        if close:
            stream.close()
    return 0


# -- deform -------------------------------------------------------------


def _load_json(path: str):
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def _cochain_from_document(alg, doc):
    """Accept a single-cochain document or a one-vector basis export."""
    if isinstance(doc, dict) and "terms" in doc:
        return cochain_from_json(alg, doc)
    if isinstance(doc, dict) and "basis" in doc:
        block = BlockKind[str(doc["block"])]
        vectors = doc["basis"]
        if len(vectors) != 1:
            raise ValueError(
                f"basis export holds {len(vectors)} vectors; deform needs exactly one "
                "(re-export or convert to a 'terms' document)")
        terms = [{"block": block.name, **item} for item in vectors[0]]
        return cochain_from_json(alg, {"n": doc["n"], "m": doc["m"], "p": doc["p"],
                                       "terms": terms})
    raise ValueError("cochain document must carry 'terms' or 'basis'")


def cmd_deform(args) -> int:
    try:
        alg = from_json_dict(_load_json(args.algebra))
        phi = _cochain_from_document(alg, _load_json(args.cocycle))
    except (OSError, json.JSONDecodeError, AlgebraFormatError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    try:
        law = deform(alg, phi)
        integrable = is_integrable(law)
    except (CharacteristicVectorViolation, NotACocycle) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INVALID_OBJECT_ERROR
    filiform = filiform_check(law) if integrable else False
    verdict = {"integrable": integrable, "filiform": filiform}
    algebra_doc = law.result.to_json_dict()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            json.dump(algebra_doc, f, indent=2)
            f.write("\n")
    else:
        verdict["algebra"] = algebra_doc
    print(json.dumps(verdict))
    return 0


# -- entry point --------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="colorfil",
        description="Deformation dimensions of graded filiform Lie algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    dims = sub.add_parser("dims", help="block dimensions at one parameter point")
    dims.add_argument("--n", type=int, required=True)
    dims.add_argument("--m", type=int, required=True)
    dims.add_argument("--p", type=int, required=True)
    dims.add_argument("--method", action="append",
                      choices=sorted(METHOD_ALIASES), default=None,
                      help="closed | brute | weights (repeatable; default closed)")
    dims.add_argument("--allow-x0-target", action="store_true",
                      help="keep X0 as an admissible target of the A and E blocks")
    dims.set_defaults(func=cmd_dims)

    verify = sub.add_parser("verify", help="cross-check all methods over a grid")
    verify.add_argument("--n", type=_parse_range, required=True, metavar="LO..HI")
    verify.add_argument("--m", type=_parse_range, required=True, metavar="LO..HI")
    verify.add_argument("--p", type=_parse_range, required=True, metavar="LO..HI")
    verify.add_argument("--methods", type=_parse_methods,
                        default=[METHOD_BRUTE, METHOD_CLOSED, METHOD_WEIGHTS],
                        help="comma list: brute,closed,weights (default all)")
    verify.add_argument("--format", choices=("json", "csv"), default="json")
    verify.add_argument("--output", default=None, help="report path (default stdout)")
    verify.add_argument("--jobs", type=int, default=0,
                        help="parallel grid workers (default: available cores)")
    verify.set_defaults(func=cmd_verify)

    cocycles = sub.add_parser("cocycles", help="export a kernel basis of one block")
    cocycles.add_argument("--n", type=int, required=True)
    cocycles.add_argument("--m", type=int, required=True)
    cocycles.add_argument("--p", type=int, required=True)
    cocycles.add_argument("--block", required=True, metavar="A..F")
    cocycles.add_argument("--out", default=None, help="output path (default stdout)")
    cocycles.add_argument("--allow-x0-target", action="store_true")
    cocycles.set_defaults(func=cmd_cocycles)

    deform_p = sub.add_parser("deform", help="apply a cocycle to an algebra file")
    deform_p.add_argument("--algebra", required=True, help="algebra JSON path")
    deform_p.add_argument("--cocycle", required=True, help="cochain JSON path")
    deform_p.add_argument("--out", default=None, help="deformed algebra path")
    deform_p.set_defaults(func=cmd_deform)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "method", "skip") is None:
        args.method = ["closed"]
    if getattr(args, "method", None):
        args.method = [METHOD_ALIASES[m] for m in args.method]
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
