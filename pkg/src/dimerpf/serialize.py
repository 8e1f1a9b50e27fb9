"""JSON reading and writing for graphs, coverings and exact values.

Graph documents look like::

    {"vertices": [{"id": 0, "pos": [0, 0], "monomer": "1"}, ...],
     "edges": [{"u": 0, "v": 1, "dimer": "3/2"}, ...],
     "rotation": {"0": [1, 3], ...},       # only without positions
     "outer_face": [[0, 1], ...],          # one dart per component with edges
     "nesting": {"5": [2, 3]}}             # optional, rotation form only

With positions on every vertex the embedding is the straight-line one;
otherwise ``rotation`` (counterclockwise neighbour lists) and ``outer_face``
are required.  Weights are rational strings and default to 1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Mapping

from .embedding import PlanarGraph, edge
from .errors import DuplicateEdge, InvalidGraph
from .poly import to_fraction


def parse_rational(value: Any, what: str = "weight") -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidGraph(f"{what} must be an integer or a rational string, got {value!r}")
    try:
        return Fraction(value) if isinstance(value, str) else to_fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InvalidGraph(f"bad {what} {value!r}") from exc


def _coordinate(c: Any) -> Fraction:
    # floats are converted exactly; they are positions, not weights
    return Fraction(c) if isinstance(c, float) else parse_rational(c, "coordinate")


def graph_from_json(data: Mapping[str, Any]) -> PlanarGraph:
    if not isinstance(data, Mapping) or "vertices" not in data:
        raise InvalidGraph("graph document needs a 'vertices' list")
    verts = data["vertices"]
    ids = [int(v["id"]) for v in verts]
    if len(set(ids)) != len(ids):
        raise InvalidGraph("vertex ids are not unique")
    monomer = {int(v["id"]): parse_rational(v.get("monomer", "1"), "monomer weight") for v in verts}
    edges: dict[tuple[int, int], Fraction] = {}
    for e in data.get("edges", []):
        key = (int(e["u"]), int(e["v"]))
        if key in edges or key[::-1] in edges:
            raise DuplicateEdge(f"edge {key} listed twice")
        edges[key] = parse_rational(e.get("dimer", "1"), "dimer weight")
    if verts and all("pos" in v for v in verts):
        pts = {int(v["id"]): tuple(_coordinate(c) for c in v["pos"]) for v in verts}
        return PlanarGraph.from_coordinates(pts, edges, monomer)
    rot = data.get("rotation")
    if rot is None:
        if edges:
            raise InvalidGraph("graphs without positions need a 'rotation' system")
        rot = {}
    rotation = {v: [] for v in monomer}
    rotation.update({int(k): [int(u) for u in r] for k, r in rot.items()})
    known = {edge(a, b) for a, b in edges}
    for v, ns in rotation.items():
        for u in ns:
            if edge(u, v) not in known:
                raise InvalidGraph(f"rotation at {v} lists {u}, which is not an edge")
    darts = data.get("outer_face") or []
    if darts and isinstance(darts[0], int):
        darts = [darts]
    outer = {i: (int(d[0]), int(d[1])) for i, d in enumerate(darts)}
    nesting = {int(k): (int(d[0]), int(d[1])) for k, d in (data.get("nesting") or {}).items()}
    dimer = {edge(a, b): w for (a, b), w in edges.items()}
    return PlanarGraph(monomer, dimer, rotation, outer, nesting)


def graph_to_json(g: PlanarGraph) -> dict[str, Any]:
    verts = []
    for v in g.vertices:
        item: dict[str, Any] = {"id": v}
        if g.coords:
            item["pos"] = [str(c) for c in g.coords[v]]
        item["monomer"] = str(g.monomer[v])
        verts.append(item)
    out: dict[str, Any] = {
        "vertices": verts,
        "edges": [{"u": u, "v": v, "dimer": str(g.weight(u, v))} for u, v in g.edges],
    }
    if not g.coords:
        out["rotation"] = {str(v): list(g.rotation[v]) for v in g.vertices}
        out["outer_face"] = [list(d) for d in g.outer_darts().values() if d is not None]
        if g.nesting():
            out["nesting"] = {str(k): list(d) for k, d in sorted(g.nesting().items())}
    return out
