"""JSON graph documents and headerless CSV matrices.

A document holds a superhypergraph (nested arrays: a string is a leaf, an
array is a set), an optional block of membership annotations on its 2-vertex
edges, and an optional fuzzy hypergraph over the same base vertices.  Reals
are written with 17 significant digits so every float64 round-trips.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np

from .core import (Hypergraph, Leaf, Nest, SuperHyperGraph, Superedge, canonicalize, expand,
                   nested, to_plain)
from .uncertain import (KINDS, AnnotatedGraph, ContradictionTable, FuzzyEdge, FuzzyHypergraph,
                        FuzzyMembership, NeutrosophicTriplet, PartitionedMembership,
                        PlithogenicAnnotation)

FORMAT_VERSION = 1
TOP_KEYS = {"format_version", "base_vertices", "level", "supervertices", "superedges",
            "annotations", "fuzzy_hypergraph"}
EDGE_KEYS = {"members", "weight", "id"}
ANNOTATION_KEYS = {"kind", "vertices", "edges", "dcf"}


class DocumentError(ValueError):
    """Malformed document; the message carries a line/column or a JSON pointer."""


@dataclass(frozen=True)
class GraphDocument:
    shg: SuperHyperGraph
    annotations: AnnotatedGraph | None = None
    fuzzy: FuzzyHypergraph | None = None
    warnings: tuple[str, ...] = field(default=(), compare=False)


# --- number formatting and JSON emission ------------------------------------

def fmt(x: float) -> str:
    """Shortest form with 17 significant digits that reads back as a float."""
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite value {x}")
    s = format(x, ".17g")
    if not any(ch in s for ch in ".en"):
        s += ".0"
    return s


def _is_scalar(v) -> bool:
    return v is None or isinstance(v, (str, bool, int, float, np.integer, np.floating))


def _scalar(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return fmt(v)
    return json.dumps(v, ensure_ascii=False)


def dumps(obj: Any, indent: int = 0) -> str:
    """Deterministic JSON: dict keys in insertion order, flat lists on one line."""
    pad = "  " * (indent + 1)
    end = "  " * indent
    if _is_scalar(obj):
        return _scalar(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k), ensure_ascii=False)}: {dumps(v, indent + 1)}"
                 for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    obj = list(obj)
    if not obj:
        return "[]"
    if all(_is_scalar(v) or _flat_nested(v) for v in obj):
        return "[" + ", ".join(dumps(v, indent + 1) for v in obj) + "]"
    return "[\n" + ",\n".join(pad + dumps(v, indent + 1) for v in obj) + "\n" + end + "]"


def _flat_nested(v) -> bool:
    # nested string arrays (set elements) stay on one line
    if isinstance(v, (list, tuple)):
        return all(isinstance(x, str) or _flat_nested(x) for x in v)
    return False


# --- parsing ----------------------------------------------------------------

def _pointer(*parts) -> str:
    return "/" + "/".join(str(p).replace("~", "~0").replace("/", "~1") for p in parts)


def _element(raw, path: tuple, known: set[str]):
    """Parse a nested element; errors point at ``path``, the element's own slot."""
    if not isinstance(raw, (str, list)):
        raise DocumentError(f"{_pointer(*path)}: element must be a string or an array")
    if isinstance(raw, str):
        if raw not in known:
            raise DocumentError(f"{_pointer(*path)}: unknown base vertex {raw!r}")
        return Leaf(raw)
    return Nest(tuple(_element(c, path, known) for c in raw))


def _check_rank(e, path: tuple, level: int) -> None:
    if e.rank > level:
        raise DocumentError(f"{_pointer(*path)}: rank {e.rank} exceeds level {level}")


def _number(raw, path: tuple, lo: float | None = None) -> float:
    if isinstance(raw, bool) or not isinstance(raw, (int, float)):
        raise DocumentError(f"{_pointer(*path)}: expected a number")
    x = float(raw)
    if not math.isfinite(x) or (lo is not None and x < lo):
        raise DocumentError(f"{_pointer(*path)}: value {raw} out of range")
    return x


def _unknown(obj: dict, allowed: set[str], path: tuple, strict: bool, warnings: list[str]):
    for k in obj:
        if k not in allowed:
            msg = f"{_pointer(*path, k)}: unknown field"
            if strict:
                raise DocumentError(msg)
            warnings.append(msg)


def _parse_membership(kind: str, raw, path: tuple, edge: bool):
    if kind == "fuzzy":
        return FuzzyMembership(_number(raw, path))
    if kind == "neutrosophic":
        if not isinstance(raw, list) or len(raw) != 3:
            raise DocumentError(f"{_pointer(*path)}: expected [t, i, f]")
        return NeutrosophicTriplet(*(_number(x, path + (i,)) for i, x in enumerate(raw)))
    if kind == "plithogenic":
        if not isinstance(raw, dict) or "daf" not in raw:
            raise DocumentError(f"{_pointer(*path)}: expected an object with 'daf'")
        daf = raw["daf"]
        if not isinstance(daf, list):
            raise DocumentError(f"{_pointer(*path, 'daf')}: expected an array")
        value = raw.get("value")
        if not edge and not isinstance(value, str):
            raise DocumentError(f"{_pointer(*path, 'value')}: vertex needs an attribute value")
        return PlithogenicAnnotation(tuple(_number(x, path + ("daf", i))
                                           for i, x in enumerate(daf)), value)
    if not isinstance(raw, list):
        raise DocumentError(f"{_pointer(*path)}: expected an array")
    return PartitionedMembership(kind, tuple(_number(x, path + (i,)) for i, x in enumerate(raw)))


def _parse_annotations(raw, shg: SuperHyperGraph, strict: bool, warnings: list[str]
                       ) -> AnnotatedGraph:
    path = ("annotations",)
    if not isinstance(raw, dict):
        raise DocumentError(f"{_pointer(*path)}: expected an object")
    _unknown(raw, ANNOTATION_KEYS, path, strict, warnings)
    kind = raw.get("kind")
    if kind not in KINDS:
        raise DocumentError(f"{_pointer(*path, 'kind')}: unknown kind {kind!r}")
    h = expand(shg)
    vraw, eraw = raw.get("vertices", {}), raw.get("edges", {})
    if not isinstance(vraw, dict) or not isinstance(eraw, dict):
        raise DocumentError(f"{_pointer(*path)}: 'vertices' and 'edges' must be objects")
    vals = []
    for v in h.vertices:
        if v not in vraw:
            raise DocumentError(f"{_pointer(*path, 'vertices', v)}: missing annotation")
        vals.append(_parse_membership(kind, vraw[v], path + ("vertices", v), False))
    for v in vraw:
        if v not in h._index:
            raise DocumentError(f"{_pointer(*path, 'vertices', v)}: unknown vertex")
    edges, evals = [], []
    for j, e in enumerate(h.hyperedges):
        if len(e.members) != 2:
            raise DocumentError(f"{_pointer('superedges', j)}: annotated graphs need "
                                f"edges of exactly 2 base vertices")
        key = str(e.id)
        if key not in eraw:
            raise DocumentError(f"{_pointer(*path, 'edges', key)}: missing annotation")
        edges.append(e.members)
        evals.append(_parse_membership(kind, eraw[key], path + ("edges", key), True))
    dcf = None
    if kind == "plithogenic":
        d = raw.get("dcf")
        if not isinstance(d, dict) or "values" not in d or "table" not in d:
            raise DocumentError(f"{_pointer(*path, 'dcf')}: expected {{values, table}}")
        try:
            dcf = ContradictionTable(tuple(d["values"]), np.asarray(d["table"], dtype=float))
        except (TypeError, ValueError) as exc:
            raise DocumentError(f"{_pointer(*path, 'dcf', 'table')}: {exc}") from None
    try:
        return AnnotatedGraph(h.vertices, tuple(edges), kind, tuple(vals), tuple(evals), dcf)
    except ValueError as exc:
        raise DocumentError(f"{_pointer(*path)}: {exc}") from None


def _parse_fuzzy(raw, vertices: tuple[str, ...], strict: bool, warnings: list[str]
                 ) -> FuzzyHypergraph:
    path = ("fuzzy_hypergraph",)
    if not isinstance(raw, dict) or not isinstance(raw.get("edges"), list):
        raise DocumentError(f"{_pointer(*path)}: expected an object with an 'edges' array")
    _unknown(raw, {"edges"}, path, strict, warnings)
    known = set(vertices)
    edges = []
    for j, e in enumerate(raw["edges"]):
        p = path + ("edges", j)
        if not isinstance(e, dict) or not isinstance(e.get("membership"), dict):
            raise DocumentError(f"{_pointer(*p)}: expected an object with 'membership'")
        _unknown(e, {"membership", "weight"}, p, strict, warnings)
        mem = {}
        for v, mu in e["membership"].items():
            if v not in known:
                raise DocumentError(f"{_pointer(*p, 'membership', v)}: unknown base vertex")
            mu = _number(mu, p + ("membership", v))
            if not 0.0 <= mu <= 1.0:
                raise DocumentError(f"{_pointer(*p, 'membership', v)}: membership outside [0,1]")
            mem[v] = mu
        edges.append(FuzzyEdge(mem, _number(e.get("weight", 1.0), p + ("weight",), 0.0)))
    return FuzzyHypergraph(vertices, tuple(edges))


def parse(data: dict, strict: bool = False) -> GraphDocument:
    warnings: list[str] = []
    if not isinstance(data, dict):
        raise DocumentError("/: document must be a JSON object")
    _unknown(data, TOP_KEYS, (), strict, warnings)
    version = data.get("format_version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise DocumentError(f"/format_version: unsupported version {version!r}")
    base = data.get("base_vertices")
    if not isinstance(base, list) or not all(isinstance(v, str) and v for v in base):
        raise DocumentError("/base_vertices: expected an array of non-empty strings")
    if len(set(base)) != len(base):
        raise DocumentError("/base_vertices: duplicate names")
    level = data.get("level", 1)
    if isinstance(level, bool) or not isinstance(level, int) or level < 0:
        raise DocumentError("/level: expected a non-negative integer")
    known = set(base)
    sv = []
    for i, raw in enumerate(data.get("supervertices", [])):
        e = _element(raw, ("supervertices", i), known)
        _check_rank(e, ("supervertices", i), level)
        sv.append(e)
    se = []
    seen_ids: set[int] = set()
    raw_edges = data.get("superedges", [])
    if not isinstance(raw_edges, list):
        raise DocumentError("/superedges: expected an array")
    for j, raw in enumerate(raw_edges):
        p = ("superedges", j)
        if not isinstance(raw, dict) or not isinstance(raw.get("members"), list):
            raise DocumentError(f"{_pointer(*p)}: expected an object with a 'members' array")
        _unknown(raw, EDGE_KEYS, p, strict, warnings)
        members = []
        for i, m in enumerate(raw["members"]):
            e = _element(m, p + ("members", i), known)
            _check_rank(e, p + ("members", i), level)
            members.append(e)
        w = _number(raw.get("weight", 1.0), p + ("weight",), 0.0)
        eid = raw.get("id", j)
        if isinstance(eid, bool) or not isinstance(eid, int):
            raise DocumentError(f"{_pointer(*p, 'id')}: expected an integer")
        if eid in seen_ids:
            raise DocumentError(f"{_pointer(*p, 'id')}: duplicate id {eid}")
        seen_ids.add(eid)
        se.append(Superedge(tuple(members), w, eid))
    shg = SuperHyperGraph(tuple(base), level, tuple(sv), tuple(se))
    ann = (_parse_annotations(data["annotations"], shg, strict, warnings)
           if "annotations" in data else None)
    fuzzy = (_parse_fuzzy(data["fuzzy_hypergraph"], tuple(base), strict, warnings)
             if "fuzzy_hypergraph" in data else None)
    return GraphDocument(shg, ann, fuzzy, tuple(warnings))


def loads(text: str, strict: bool = False) -> GraphDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"parse error at line {exc.lineno} column {exc.colno}: "
                            f"{exc.msg}") from None
    return parse(data, strict)


def load(path: str | Path, strict: bool = False) -> GraphDocument:
    return loads(Path(path).read_text(encoding="utf-8"), strict)


# --- emission ----------------------------------------------------------------

def _membership_plain(a):
    if isinstance(a, FuzzyMembership):
        return a.mu
    if isinstance(a, NeutrosophicTriplet):
        return [a.t, a.i, a.f]
    if isinstance(a, PlithogenicAnnotation):
        out = {}
        if a.value is not None:
            out["value"] = a.value
        out["daf"] = list(a.daf)
        return out
    return list(a.values)


def to_data(doc: GraphDocument | SuperHyperGraph) -> dict:
    if isinstance(doc, SuperHyperGraph):
        doc = GraphDocument(doc)
    shg = doc.shg
    data: dict[str, Any] = {
        "format_version": FORMAT_VERSION,
        "base_vertices": list(shg.base_vertices),
        "level": shg.level,
        "supervertices": [to_plain(canonicalize(v)) for v in shg.supervertices],
        "superedges": [{"members": to_plain(canonicalize(Nest(e.members))),
                        "weight": float(e.weight), "id": e.id} for e in shg.superedges],
    }
    g = doc.annotations
    if g is not None:
        h = expand(shg)
        ann: dict[str, Any] = {
            "kind": g.kind,
            "vertices": {v: _membership_plain(a) for v, a in zip(g.vertices, g.vertex_values)},
            "edges": {str(e.id): _membership_plain(a)
                      for e, a in zip(h.hyperedges, g.edge_values)},
        }
        if g.dcf is not None:
            t = g.dcf.table
            ann["dcf"] = {"values": list(g.dcf.values),
                          "table": (t[:, :, 0] if t.shape[2] == 1 else t).tolist()}
        data["annotations"] = ann
    if doc.fuzzy is not None:
        data["fuzzy_hypergraph"] = {"edges": [
            {"membership": {v: float(e.membership[v]) for v in doc.fuzzy.vertices
                            if v in e.membership},
             "weight": float(e.weight)} for e in doc.fuzzy.edges]}
    return data


def saves(doc: GraphDocument | SuperHyperGraph) -> str:
    return dumps(to_data(doc)) + "\n"


def save(doc: GraphDocument | SuperHyperGraph, path: str | Path) -> None:
    Path(path).write_text(saves(doc), encoding="utf-8")


def hypergraph_data(h: Hypergraph) -> dict:
    return {"vertices": list(h.vertices),
            "hyperedges": [{"id": e.id, "members": list(e.members), "weight": float(e.weight)}
                           for e in h.hyperedges]}


def plain_shg(base, level, supervertices, superedges, weights=None) -> SuperHyperGraph:
    """Small helper mirroring the document layout."""
    return SuperHyperGraph.build(base, level, [nested(v) for v in supervertices],
                                 superedges, weights)


# --- CSV ---------------------------------------------------------------------

def read_matrix(path: str | Path) -> np.ndarray:
    try:
        M = np.loadtxt(path, delimiter=",", ndmin=2, dtype=float)
    except ValueError as exc:
        raise DocumentError(f"{path}: {exc}") from None
    if not np.all(np.isfinite(M)):
        raise DocumentError(f"{path}: non-finite entries")
    return M


def matrix_csv(M: np.ndarray) -> str:
    M = np.atleast_2d(np.asarray(M, dtype=float))
    return "".join(",".join(fmt(x) for x in row) + "\n" for row in M)


def rows_csv(rows) -> str:
    out = []
    for row in rows:
        out.append(",".join(fmt(x) if isinstance(x, (float, np.floating)) else str(x)
                            for x in row))
    return "".join(r + "\n" for r in out)
