"""``dimerpf`` command line.

Every command prints one JSON document.  Exit status: 0 on success, 1 when a
verification step disagrees, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from contextlib import nullcontext
from typing import Any, Sequence

from . import fixtures as fx
from .corpus import cycle
from .embedding import PlanarGraph, edge
from .errors import DimerError, TooLarge
from .fullmd import (
    Skeleton,
    build_skeleton_rectangle,
    find_hamiltonian_cycle,
    full_partition_inout,
    full_partition_skeleton,
)
from .kasteleyn import all_covering_signs, verify_kasteleyn
from .oracle import enumerate_coverings, enumerate_partition, oracle_cap, z_to_x
from .partition import (
    boundary_partition,
    boundary_partition_bijection,
    monomer_correlation,
    prepare,
    wick_correlation,
)
from .pfaffian import pf_univariate
from .poly import SparsePoly
from .serialize import graph_from_json, parse_rational

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load_json(path: str) -> Any:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: JSON parse error: {exc}") from exc


def _load_graph(path: str) -> PlanarGraph:
    data = _load_json(path)
    try:
        return graph_from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: malformed graph document ({exc!r})") from exc


def _poly(p: SparsePoly, var: str) -> dict[str, str]:
    return p.to_json(var)


def _executor(threads: int):
    return ProcessPoolExecutor(threads) if threads and threads > 1 else nullcontext(None)


# ---------------------------------------------------------------------- commands


def cmd_boundary_partition(args) -> tuple[dict, int]:
    g = _load_graph(args.graph)
    fn = boundary_partition_bijection if args.method == "bijection" else boundary_partition
    p = fn(g, var=args.var)
    return {"command": "boundary-partition", "method": args.method, "var": args.var,
            "polynomial": _poly(p, args.var)}, EXIT_OK


def _load_skeleton(path: str, g: PlanarGraph) -> tuple[PlanarGraph | None, Skeleton]:
    """Removed edges listed in ``path``; those present in ``g`` are cut out of it.

    Removed edges absent from ``g`` are crossing edges of a non-planar
    input whose planar part is ``g``.
    """
    data = _load_json(path)
    try:
        items = data["removed"]
        removed = {}
        for e in items:
            key = edge(int(e["u"]), int(e["v"]))
            if key in g.dimer:
                removed[key] = parse_rational(e["dimer"], "dimer weight") if "dimer" in e else g.dimer[key]
            else:
                removed[key] = parse_rational(e.get("dimer", "1"), "dimer weight")
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: malformed skeleton document ({exc!r})") from exc
    inside = [e for e in removed if e in g.dimer]
    s = g.delete_edges(inside) if inside else g
    full = g if len(inside) == len(removed) else None
    if full is not None:
        full = full.with_weights(dimer={e: removed[e] for e in inside})
    return full, Skeleton(s, removed)


def _parse_rect(text: str) -> tuple[int, int]:
    try:
        L, M = (int(t) for t in text.lower().split("x"))
    except ValueError as exc:
        raise InputError(f"--rect expects LxM, got {text!r}") from exc
    return L, M


def cmd_full_partition(args) -> tuple[dict, int]:
    counter: Counter = Counter()
    report: dict[str, Any] = {"command": "full-partition", "method": args.method, "var": args.var}
    if args.rect:
        g, sk = build_skeleton_rectangle(*_parse_rect(args.rect))
    elif args.graph:
        g = _load_graph(args.graph)
        sk = None
    else:
        raise InputError("give --graph or --rect")
    if args.method == "skeleton":
        if sk is None:
            if not args.skeleton:
                raise InputError("the skeleton method needs --skeleton or --rect")
            g, sk = _load_skeleton(args.skeleton, g)
        with _executor(args.threads) as ex:
            p = full_partition_skeleton(g, sk, var=args.var, executor=ex, counter=counter)
        report["pfaffians"] = counter["pfaffians"]
        report["removed_edges"] = len(sk.removed)
    elif args.method == "inout":
        hc = find_hamiltonian_cycle(g)
        p = full_partition_inout(hc.graph, hc.cycle, var=args.var)
        report["cycle"] = list(hc.cycle.vertices)
        report["augmented"] = hc.augmented
    else:
        p = enumerate_partition(g, "all", var="z")
        p = p if args.var == "z" else z_to_x(p)
    report["polynomial"] = _poly(p, args.var)
    return report, EXIT_OK


def _parse_indices(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise InputError(f"--indices expects comma separated vertex ids, got {text!r}") from exc


def cmd_correlations(args) -> tuple[dict, int]:
    g = _load_graph(args.graph)
    verts = _parse_indices(args.indices)
    p = prepare(g)
    fn = wick_correlation if args.method == "wick" else monomer_correlation
    value = fn(g, verts, pipeline=p)
    return {"command": "correlations", "method": args.method, "vertices": verts,
            "labels": [p.labeling[v] for v in verts], "value": str(value)}, EXIT_OK


def cmd_orient(args) -> tuple[dict, int]:
    g = _load_graph(args.graph)
    p = prepare(g)
    E = p.enclosed.graph
    report: dict[str, Any] = {
        "command": "orient",
        "augmentation": p.record.to_json(),
        "boundary": list(p.enclosed.boundary),
        "labeling": {str(v): p.labeling[v] for v in sorted(p.labeling)},
        "orientation": [list(p.orient[e]) for e in sorted(E.dimer, key=sorted)],
    }
    code = EXIT_OK
    if len(E.vertices) <= args.cap:
        ok = verify_kasteleyn(E, p.orient, cap=args.cap)
        report["kasteleyn_verified"] = ok
        signs = all_covering_signs(p.orient, p.labeling, enumerate_coverings(E, "boundary"))
        report["positivity_verified"] = signs <= {1}
        if not ok or not signs <= {1}:
            code = EXIT_MISMATCH
    return report, code


def cmd_check(args) -> tuple[dict, int]:
    g = _load_graph(args.graph)
    a = boundary_partition(g)
    b = boundary_partition_bijection(g)
    report: dict[str, Any] = {"command": "check", "polynomial": _poly(a, "x"), "bijection_match": a == b}
    ok = a == b
    if args.against_oracle:
        if len(g.vertices) > oracle_cap():
            raise TooLarge(f"graph has {len(g.vertices)} vertices, oracle cap is {oracle_cap()}")
        o = z_to_x(enumerate_partition(g, "boundary"))
        report["oracle_match"] = a == o
        ok = ok and a == o
    return report, EXIT_OK if ok else EXIT_MISMATCH


def cmd_fixtures(args) -> tuple[dict, int]:
    results = []
    for f in fx.MATRIX_FIXTURES:
        got = pf_univariate(f.matrix, f.var) * f.scale
        results.append({"name": f.name, "pass": got == f.expected, "polynomial": _poly(got, f.var)})
    sq = cycle(4)
    for name, fn in (("square-pfaffian", boundary_partition), ("square-bijection", boundary_partition_bijection)):
        got = fn(sq, var="z")
        results.append({"name": name, "pass": got == fx.SQUARE_Z, "polynomial": _poly(got, "z")})
    rects = [((4, 3), fx.RECT_4x3)]
    if args.all:
        rects.append(((6, 6), fx.RECT_6x6))
    for (L, M), f in rects:
        g, sk = build_skeleton_rectangle(L, M)
        counter: Counter = Counter()
        with _executor(args.threads) as ex:
            got = full_partition_skeleton(g, sk, executor=ex, counter=counter)
        results.append({"name": f.name, "pass": got == f.expected, "pfaffians": counter["pfaffians"],
                        "polynomial": _poly(got, "x")})
    ok = all(r["pass"] for r in results)
    return {"command": "fixtures", "all_pass": ok, "results": results}, EXIT_OK if ok else EXIT_MISMATCH


# ---------------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dimerpf", description="Monomer-dimer partition functions via Pfaffians.")
    ap.add_argument("--timing", action="store_true", help="add wall-clock seconds to the report")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("boundary-partition", help="monomers restricted to the outer face")
    p.add_argument("--graph", required=True)
    p.add_argument("--var", choices=["x", "z"], default="x")
    p.add_argument("--method", choices=["theorem1", "pfaffian", "bijection"], default="theorem1",
                   help="theorem1 and pfaffian are the same single-Pfaffian formula")
    p.set_defaults(func=cmd_boundary_partition)

    p = sub.add_parser("full-partition", help="monomers anywhere")
    p.add_argument("--graph")
    p.add_argument("--method", choices=["skeleton", "inout", "oracle"], required=True)
    p.add_argument("--skeleton", help="JSON file listing the removed edges")
    p.add_argument("--rect", help="use the LxM grid and its comb skeleton")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--var", choices=["x", "z"], default="x")
    p.set_defaults(func=cmd_full_partition)

    p = sub.add_parser("correlations", help="boundary monomer correlations at close packing")
    p.add_argument("--graph", required=True)
    p.add_argument("--indices", required=True, help="comma separated boundary vertex ids")
    p.add_argument("--method", choices=["wick", "ratio"], default="ratio")
    p.set_defaults(func=cmd_correlations)

    p = sub.add_parser("orient", help="show the augmented graph, orientation and labeling")
    p.add_argument("--graph", required=True)
    p.add_argument("--cap", type=int, default=16, help="verify exhaustively up to this many vertices")
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("check", help="cross-check the two boundary formulas (and the oracle)")
    p.add_argument("--graph", required=True)
    p.add_argument("--against-oracle", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("fixtures", help="replay the stored reference values")
    p.add_argument("--all", action="store_true", help="include the slow 6x6 rectangle")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_fixtures)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        report, code = args.func(args)
    except InputError as exc:
        report, code = {"error": "InputError", "message": str(exc)}, EXIT_INPUT
    except DimerError as exc:
        report, code = {"error": type(exc).__name__, "message": str(exc)}, EXIT_INPUT
    if args.timing:
        report["seconds"] = round(time.perf_counter() - start, 3)
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
