"""Base vertices, nested supervertices/superedges and expansion to flat hypergraphs.

A ``NestedElement`` is either a :class:`Leaf` (a base vertex name) or a
:class:`Nest` (a finite set of nested elements).  Elements of rank ``r`` live
in the ``r``-th iterated power set of the base vertices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union


@dataclass(frozen=True)
class Leaf:
    name: str

    @property
    def rank(self) -> int:
        return 0

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class Nest:
    children: tuple["NestedElement", ...] = ()

    @property
    def rank(self) -> int:
        if not self.children:
            return 1
        return 1 + max(c.rank for c in self.children)

    def __str__(self) -> str:
        return "{" + ",".join(str(c) for c in self.children) + "}"


NestedElement = Union[Leaf, Nest]


def nested(obj) -> NestedElement:
    """Build an element from plain Python data: ``str`` is a leaf, any other
    iterable is a set.  The result is not canonicalized."""
    if isinstance(obj, (Leaf, Nest)):
        return obj
    if isinstance(obj, str):
        return Leaf(obj)
    return Nest(tuple(nested(o) for o in obj))


def sort_key(e: NestedElement) -> tuple:
    """Total order on canonical elements: leaves (by UTF-8 name) before sets,
    sets compared as sorted tuples of child keys, so a prefix sorts first."""
    if isinstance(e, Leaf):
        return (0, e.name.encode("utf-8"))
    return (1, tuple(sorted({sort_key(c) for c in e.children})))


def serialize(e: NestedElement) -> str:
    """Canonical text key: leaves as JSON strings, sets as children in canonical order."""
    if isinstance(e, Leaf):
        return json.dumps(e.name, ensure_ascii=False)
    c = canonicalize(e)
    return "[" + ",".join(serialize(ch) for ch in c.children) + "]"


def canonicalize(e: NestedElement) -> NestedElement:
    if isinstance(e, Leaf):
        return e
    by_key: dict[tuple, NestedElement] = {}
    for c in e.children:
        cc = canonicalize(c)
        by_key.setdefault(sort_key(cc), cc)
    return Nest(tuple(by_key[k] for k in sorted(by_key)))


def to_plain(e: NestedElement):
    """Inverse of :func:`nested`: leaves become strings, sets become lists."""
    if isinstance(e, Leaf):
        return e.name
    return [to_plain(c) for c in e.children]


def expand_element(e: NestedElement) -> frozenset[str]:
    """All base vertex names reachable from ``e``."""
    if isinstance(e, Leaf):
        return frozenset((e.name,))
    out: set[str] = set()
    stack = list(e.children)
    while stack:
        c = stack.pop()
        if isinstance(c, Leaf):
            out.add(c.name)
        else:
            stack.extend(c.children)
    return frozenset(out)


def iter_leaves(e: NestedElement) -> Iterable[str]:
    if isinstance(e, Leaf):
        yield e.name
    else:
        for c in e.children:
            yield from iter_leaves(c)


@dataclass(frozen=True)
class Superedge:
    members: tuple[NestedElement, ...]
    weight: float = 1.0
    id: int = 0


@dataclass(frozen=True)
class Hyperedge:
    members: tuple[str, ...]
    weight: float = 1.0
    id: int = 0


@dataclass(frozen=True)
class Hypergraph:
    """Flat hypergraph.  Hyperedge members are stored in vertex order."""

    vertices: tuple[str, ...]
    hyperedges: tuple[Hyperedge, ...] = ()
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        index = {v: i for i, v in enumerate(self.vertices)}
        if len(index) != len(self.vertices):
            raise ValueError("duplicate vertex names")
        object.__setattr__(self, "_index", index)
        edges = []
        for e in self.hyperedges:
            missing = [m for m in e.members if m not in index]
            if missing:
                raise ValueError(f"hyperedge {e.id} has unknown vertices {missing}")
            if e.weight < 0:
                raise ValueError(f"hyperedge {e.id} has negative weight {e.weight}")
            ordered = tuple(sorted(set(e.members), key=index.__getitem__))
            edges.append(Hyperedge(ordered, float(e.weight), e.id))
        object.__setattr__(self, "hyperedges", tuple(edges))

    @classmethod
    def from_edges(cls, vertices: Sequence[str], edges: Iterable[Iterable[str]],
                   weights: Sequence[float] | None = None) -> "Hypergraph":
        edges = [tuple(e) for e in edges]
        if weights is None:
            weights = [1.0] * len(edges)
        return cls(tuple(vertices),
                   tuple(Hyperedge(e, w, j) for j, (e, w) in enumerate(zip(edges, weights))))

    def index(self, name: str) -> int:
        return self._index[name]

    def edge_indices(self) -> list[list[int]]:
        return [[self._index[m] for m in e.members] for e in self.hyperedges]

    @property
    def weights(self):
        import numpy as np

        return np.array([e.weight for e in self.hyperedges], dtype=float)


@dataclass(frozen=True)
class SuperHyperGraph:
    """Supervertices and weighted superedges over nested elements of rank <= ``level``.

    Construction canonicalizes every element; it does not validate (see
    :func:`validate`), so malformed graphs can still be inspected and reported.
    """

    base_vertices: tuple[str, ...]
    level: int
    supervertices: tuple[NestedElement, ...] = ()
    superedges: tuple[Superedge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "base_vertices", tuple(self.base_vertices))
        object.__setattr__(self, "supervertices",
                           tuple(canonicalize(nested(v)) for v in self.supervertices))
        edges = []
        for e in self.superedges:
            members = canonicalize(Nest(tuple(nested(m) for m in e.members))).children
            edges.append(Superedge(members, float(e.weight), e.id))
        object.__setattr__(self, "superedges", tuple(edges))

    @classmethod
    def build(cls, base_vertices: Sequence[str], level: int, supervertices=(),
              superedges=(), weights: Sequence[float] | None = None) -> "SuperHyperGraph":
        """Convenience constructor from plain nested lists; ids are positional."""
        superedges = list(superedges)
        if weights is None:
            weights = [1.0] * len(superedges)
        return cls(tuple(base_vertices), level, tuple(nested(v) for v in supervertices),
                   tuple(Superedge(tuple(nested(m) for m in e), w, j)
                         for j, (e, w) in enumerate(zip(superedges, weights))))

    @classmethod
    def from_hypergraph(cls, h: Hypergraph) -> "SuperHyperGraph":
        """Singleton-supervertex lift: each base vertex ``x`` becomes ``{x}``."""
        return cls(h.vertices, 1, tuple(Nest((Leaf(v),)) for v in h.vertices),
                   tuple(Superedge(tuple(Nest((Leaf(m),)) for m in e.members), e.weight, e.id)
                         for e in h.hyperedges))


def validate(shg: SuperHyperGraph) -> list[str]:
    """Invariant violations as human-readable strings; empty iff valid."""
    problems: list[str] = []
    known = set(shg.base_vertices)
    if len(known) != len(shg.base_vertices):
        problems.append("duplicate base vertex names")
    if any(not v for v in shg.base_vertices):
        problems.append("empty base vertex name")

    def check(e: NestedElement, where: str):
        for name in iter_leaves(e):
            if name not in known:
                problems.append(f"{where}: unknown leaf {name!r}")
        if e.rank > shg.level:
            problems.append(f"{where}: rank {e.rank} exceeds level {shg.level}")

    for i, v in enumerate(shg.supervertices):
        check(v, f"supervertex {i}")
    seen_ids: set[int] = set()
    for j, e in enumerate(shg.superedges):
        for m in e.members:
            check(m, f"superedge {j}")
        if e.weight < 0:
            problems.append(f"superedge {j}: negative weight {e.weight}")
        if e.id in seen_ids:
            problems.append(f"superedge {j}: duplicate id {e.id}")
        seen_ids.add(e.id)
    return problems


def expand_superedge(e: Superedge) -> frozenset[str]:
    """Union of the expansions of the edge's members."""
    out: set[str] = set()
    for m in e.members:
        out |= expand_element(m)
    return frozenset(out)


def expand(shg: SuperHyperGraph) -> Hypergraph:
    """Expanded hypergraph on the base vertices; one hyperedge per superedge, no merging."""
    return Hypergraph(shg.base_vertices,
                      tuple(Hyperedge(tuple(expand_superedge(e)), e.weight, e.id)
                            for e in shg.superedges))


def as_hypergraph(g: SuperHyperGraph | Hypergraph) -> Hypergraph:
    return expand(g) if isinstance(g, SuperHyperGraph) else g


def label(e: NestedElement) -> str:
    """Display name used for walk states and CSV rows."""
    return str(e)


def supervertex_hypergraph(shg: SuperHyperGraph) -> Hypergraph:
    """Hypergraph whose vertices are the supervertices (named by :func:`label`).

    Superedge members must be listed supervertices.
    """
    keys = [serialize(v) for v in shg.supervertices]
    if len(set(keys)) != len(keys):
        raise ValueError("duplicate supervertices")
    names = {k: label(v) for k, v in zip(keys, shg.supervertices)}
    edges = []
    for e in shg.superedges:
        members = []
        for m in e.members:
            k = serialize(m)
            if k not in names:
                raise ValueError(f"superedge {e.id} member {label(m)} is not a supervertex")
            members.append(names[k])
        edges.append(Hyperedge(tuple(members), e.weight, e.id))
    return Hypergraph(tuple(label(v) for v in shg.supervertices), tuple(edges))
