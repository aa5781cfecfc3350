"""Exhaustive oracles: pattern containment, uniform Turán numbers, decision trees."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence, Union

import numpy as np

MAX_N, MAX_R, MAX_SUBSETS = 9, 3, 36


@dataclass(frozen=True)
class UniformHypergraphPattern:
    """``r``-uniform hypergraph on vertices ``0..n-1``."""

    n: int
    r: int
    edges: tuple[frozenset[int], ...]

    def __post_init__(self):
        edges = tuple(sorted({frozenset(int(v) for v in e) for e in self.edges}, key=sorted))
        for e in edges:
            if len(e) != self.r:
                raise ValueError(f"edge {sorted(e)} does not have exactly {self.r} vertices")
            if any(not 0 <= v < self.n for v in e):
                raise ValueError(f"edge {sorted(e)} uses a vertex outside 0..{self.n - 1}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def complete(cls, n: int, r: int) -> "UniformHypergraphPattern":
        return cls(n, r, tuple(frozenset(c) for c in combinations(range(n), r)))

    def degrees(self) -> np.ndarray:
        d = np.zeros(self.n, dtype=int)
        for e in self.edges:
            for v in e:
                d[v] += 1
        return d


def triangle() -> UniformHypergraphPattern:
    return UniformHypergraphPattern.complete(3, 2)


def contains_pattern(G: UniformHypergraphPattern, F: UniformHypergraphPattern) -> bool:
    """Whether some injective vertex map sends every edge of ``F`` onto an edge of ``G``."""
    if G.r != F.r:
        raise ValueError(f"uniformity mismatch: r={G.r} vs r={F.r}")
    if not F.edges:
        raise ValueError("pattern has no edges")
    if len(F.edges) > len(G.edges) or F.n > G.n:
        return False
    gedges = set(G.edges)
    gdeg = G.degrees()
    fdeg = F.degrees()
    # high-degree pattern vertices first prune the search earliest
    order = sorted(range(F.n), key=lambda v: (-fdeg[v], v))
    f_inc = [[e for e in F.edges if v in e] for v in range(F.n)]
    image = [-1] * F.n
    used = [False] * G.n

    def consistent(v: int) -> bool:
        for e in f_inc[v]:
            if all(image[u] >= 0 for u in e):
                if frozenset(image[u] for u in e) not in gedges:
                    return False
        return True

    def search(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for x in range(G.n):
            if used[x] or gdeg[x] < fdeg[v]:
                continue
            image[v], used[x] = x, True
            if consistent(v) and search(i + 1):
                return True
            image[v], used[x] = -1, False
        return False

    return search(0)


@dataclass(frozen=True)
class TuranResult:
    ex: int
    witness: UniformHypergraphPattern


def _guard(N: int, r: int) -> None:
    if N > MAX_N or r > MAX_R or comb(N, r) > MAX_SUBSETS:
        raise ValueError(f"exhaustive search limited to N <= {MAX_N}, r <= {MAX_R}, "
                         f"C(N,r) <= {MAX_SUBSETS}; got N={N}, r={r}")
    if r < 1 or N < 0:
        raise ValueError("need r >= 1 and N >= 0")


def _creates_copy(G_edges: list[frozenset[int]], N: int, r: int, F: UniformHypergraphPattern,
                  new_edge: frozenset[int]) -> bool:
    # G_edges is F-free, so any copy found must use new_edge
    return contains_pattern(UniformHypergraphPattern(N, r, tuple(G_edges) + (new_edge,)), F)


def turan_number(N: int, r: int, F: UniformHypergraphPattern) -> TuranResult:
    """Maximum edge count of an ``F``-free ``r``-uniform hypergraph on ``N`` vertices.

    Depth-first include/exclude search over the ``r``-subsets in lexicographic
    order.  Including an edge is only tried while the set stays ``F``-free, and
    a branch is cut when even taking every remaining subset cannot beat the
    incumbent.
    """
    _guard(N, r)
    if F.r != r:
        raise ValueError(f"uniformity mismatch: r={r} vs pattern r={F.r}")
    if not F.edges:
        raise ValueError("pattern has no edges")
    subsets = [frozenset(c) for c in combinations(range(N), r)]
    best: list[frozenset[int]] = []
    current: list[frozenset[int]] = []

    def dfs(i: int) -> None:
        nonlocal best
        if len(current) + (len(subsets) - i) <= len(best):
            return
        if i == len(subsets):
            best = list(current)
            return
        e = subsets[i]
        if not _creates_copy(current, N, r, F, e):
            current.append(e)
            dfs(i + 1)
            current.pop()
        dfs(i + 1)

    dfs(0)
    return TuranResult(len(best), UniformHypergraphPattern(N, r, tuple(best)))


def is_maximal_free(G: UniformHypergraphPattern, F: UniformHypergraphPattern) -> bool:
    """``G`` is ``F``-free and adding any missing ``r``-subset creates a copy of ``F``."""
    if G.edges and contains_pattern(G, F):
        return False
    present = set(G.edges)
    for c in combinations(range(G.n), G.r):
        e = frozenset(c)
        if e in present:
            continue
        if not contains_pattern(UniformHypergraphPattern(G.n, G.r, G.edges + (e,)), F):
            return False
    return True


@dataclass(frozen=True)
class DensityEstimate:
    Ns: tuple[int, ...]
    ratios: tuple[float, ...]
    nonincreasing: bool


def turan_density_estimate(r: int, F: UniformHypergraphPattern, Ns: Sequence[int]
                           ) -> DensityEstimate:
    ratios = []
    for N in Ns:
        total = comb(N, r)
        ratios.append(turan_number(N, r, F).ex / total if total else 0.0)
    mono = all(b <= a + 1e-15 for a, b in zip(ratios, ratios[1:]))
    return DensityEstimate(tuple(Ns), tuple(ratios), mono)


# --- decision trees ----------------------------------------------------------

@dataclass(frozen=True)
class Leaf:
    value: int


@dataclass(frozen=True)
class Node:
    """Internal node: ``high`` is the solid (=1) child, ``low`` the dashed (=0) child."""

    var: str
    low: "Union[Node, Leaf]"
    high: "Union[Node, Leaf]"


@dataclass(frozen=True)
class DecisionTree:
    order: tuple[str, ...]
    root: Union[Node, Leaf]

    def leaves(self) -> list[int]:
        """Leaf values left to right (dashed before solid)."""
        out: list[int] = []
        stack = [self.root]
        while stack:
            node = stack.pop()
            if isinstance(node, Leaf):
                out.append(node.value)
            else:
                stack.append(node.high)
                stack.append(node.low)
        return out


def build_decision_tree(table: Sequence[int], order: Sequence[str]) -> DecisionTree:
    """Complete tree; the table index of an assignment reads ``order[0]`` as the top bit."""
    order = tuple(order)
    m = len(order)
    if len(set(order)) != m:
        raise ValueError("variable names must be distinct")
    if len(table) != 2 ** m:
        raise ValueError(f"truth table has {len(table)} entries, expected {2 ** m}")
    values = [int(v) for v in table]

    def build(depth: int, offset: int):
        if depth == m:
            return Leaf(values[offset])
        half = 2 ** (m - depth - 1)
        return Node(order[depth], build(depth + 1, offset), build(depth + 1, offset + half))

    return DecisionTree(order, build(0, 0))


def evaluate(tree: DecisionTree, assignment) -> int:
    """``assignment`` is a sequence of bits in ``tree.order`` or a name-to-bit mapping."""
    if isinstance(assignment, dict):
        missing = [v for v in tree.order if v not in assignment]
        if missing:
            raise ValueError(f"assignment misses variables {missing}")
        bits = {v: int(assignment[v]) for v in tree.order}
    else:
        if len(assignment) != len(tree.order):
            raise ValueError("assignment length does not match the variable order")
        bits = dict(zip(tree.order, (int(b) for b in assignment)))
    node = tree.root
    while isinstance(node, Node):
        node = node.high if bits[node.var] else node.low
    return node.value
