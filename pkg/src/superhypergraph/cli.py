"""Command-line interface.

Exit status: 0 success, 1 domain error (one ``error: ...`` line on stderr),
2 usage error.  Commands that draw random numbers refuse to run without
``--seed``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import io
from .combinatorics import (UniformHypergraphPattern, build_decision_tree, contains_pattern,
                            evaluate, triangle, turan_number, Leaf as TreeLeaf)
from .core import Leaf, SuperHyperGraph, Superedge, expand, supervertex_hypergraph, validate
from .kmeans import rng_from_seed
from .partition import degree_centrality, multilevel_partition, ncut_spectral
from .random_walk import (WalkConfig, kernel_from_matrix, simulate, stationary,
                          transition_kernel)
from .shgnn import (ACTIVATIONS, DynamicConfig, LayerParams, NetworkConfig, attention_convolve,
                    dshgnn_forward, forward, shgnn_convolve)
from .sparse import normalized_laplacian, normalized_propagator
from .uncertain import (PGNNLayer, Rule, RuleLayer, c_cut, fgnn_forward, fhgnn_convolve,
                        ngnn_forward, pgnn_forward, validate_annotations,
                        validate_fuzzy_hypergraph)


class UsageError(Exception):
    pass


# --- helpers -----------------------------------------------------------------

def _require_seed(args) -> int:
    if args.seed is None:
        raise UsageError(f"{args.command} is randomized and needs --seed")
    return args.seed


def _load(args, path=None) -> io.GraphDocument:
    doc = io.load(path or args.graph, strict=args.strict)
    for w in doc.warnings:
        print(f"warning: {w}", file=sys.stderr)
    return doc


def _features(args, n: int) -> np.ndarray:
    X = io.read_matrix(args.features)
    if X.shape[0] != n:
        raise ValueError(f"shape mismatch: features have {X.shape[0]} rows, graph has {n} vertices")
    return X


def _random_matrix(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    return rng.standard_normal((rows, cols)) / np.sqrt(rows)


def _theta(args, d: int, rng_holder: dict) -> np.ndarray:
    if getattr(args, "theta", None):
        return io.read_matrix(args.theta)
    if getattr(args, "out_dim", None) is None:
        raise UsageError("give --theta or --out-dim")
    if "rng" not in rng_holder:
        rng_holder["rng"] = rng_from_seed(_require_seed(args))
    return _random_matrix(rng_holder["rng"], d, args.out_dim)


def _fuzzy(doc: io.GraphDocument):
    if doc.fuzzy is None:
        raise ValueError("document has no fuzzy_hypergraph block")
    return doc.fuzzy


def _annotated(doc: io.GraphDocument, kind: str, strict: bool = False):
    g = doc.annotations
    if g is None or g.kind != kind:
        raise ValueError(f"document needs {kind} annotations")
    problems = validate_annotations(g, strict)
    if problems:
        raise ValueError(f"invalid annotations: {problems[0]}")
    return g


def _pattern(doc: io.GraphDocument) -> UniformHypergraphPattern:
    h = supervertex_hypergraph(doc.shg)
    sizes = {len(e.members) for e in h.hyperedges}
    if len(sizes) != 1:
        raise ValueError("pattern graphs must be uniform with at least one edge")
    return UniformHypergraphPattern(len(h.vertices), sizes.pop(),
                                    tuple(frozenset(m) for m in h.edge_indices()))


def _pattern_doc(p: UniformHypergraphPattern) -> dict:
    names = [f"v{i + 1}" for i in range(p.n)]
    shg = SuperHyperGraph(tuple(names), 0, tuple(Leaf(v) for v in names),
                          tuple(Superedge(tuple(Leaf(names[i]) for i in sorted(e)), 1.0, j)
                                for j, e in enumerate(p.edges)))
    return io.to_data(shg)


def _tree_data(node):
    if isinstance(node, TreeLeaf):
        return node.value
    return {"var": node.var, "low": _tree_data(node.low), "high": _tree_data(node.high)}


def _read_json_arg(text: str):
    p = Path(text)
    raw = p.read_text(encoding="utf-8") if p.is_file() else text
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ValueError(f"parse error at line {exc.lineno} column {exc.colno}: {exc.msg}")


# --- commands ------------------------------------------------------------------

def cmd_validate(args) -> str:
    try:
        doc = _load(args)
    except io.DocumentError as exc:
        return f"invalid: {exc}\n", 1
    problems = validate(doc.shg)
    if doc.annotations is not None:
        problems += validate_annotations(doc.annotations, args.strict)
    if doc.fuzzy is not None:
        problems += validate_fuzzy_hypergraph(doc.fuzzy, args.strict)
    if problems:
        return "".join(f"invalid: {p}\n" for p in problems), 1
    return "valid\n"


def cmd_expand(args) -> str:
    return io.dumps(io.hypergraph_data(expand(_load(args).shg))) + "\n"


def cmd_laplacian(args) -> str:
    h = expand(_load(args).shg)
    M = normalized_propagator(h) if args.propagator else normalized_laplacian(h)
    if not isinstance(M, np.ndarray):
        raise ValueError("graph exceeds the dense matrix cap")
    return io.matrix_csv(M)


def cmd_convolve(args) -> str:
    shg = _load(args).shg
    X = _features(args, len(shg.base_vertices))
    p = LayerParams(_theta(args, X.shape[1], {}), activation=args.activation)
    return io.matrix_csv(shgnn_convolve(shg, X, p))


def cmd_forward(args) -> str:
    shg = _load(args).shg
    X = _features(args, len(shg.base_vertices))
    if args.theta_list:
        thetas = [io.read_matrix(t) for t in args.theta_list]
    else:
        if not args.dims:
            raise UsageError("give --theta (repeatable) or --dims")
        rng = rng_from_seed(_require_seed(args))
        dims = [X.shape[1]] + [int(d) for d in args.dims.split(",")]
        thetas = [_random_matrix(rng, a, b) for a, b in zip(dims, dims[1:])]
    net = NetworkConfig(tuple(LayerParams(t, activation=args.activation) for t in thetas))
    return io.matrix_csv(forward(shg, X, net))


def cmd_attention(args) -> str:
    shg = _load(args).shg
    X = _features(args, len(shg.base_vertices))
    holder: dict = {}
    theta = _theta(args, X.shape[1], holder)
    if args.a:
        a = io.read_matrix(args.a).ravel()
    else:
        if "rng" not in holder:
            holder["rng"] = rng_from_seed(_require_seed(args))
        a = holder["rng"].standard_normal(2 * theta.shape[1])
    return io.matrix_csv(attention_convolve(shg, X, a, theta, activation=args.activation))


def cmd_dshgnn(args) -> str:
    seed = _require_seed(args)
    X = io.read_matrix(args.features)
    rng = rng_from_seed(seed)
    layers = []
    d = X.shape[1]
    for i in range(args.layers):
        theta = io.read_matrix(args.theta) if args.theta else _random_matrix(rng, d, args.out_dim or d)
        cfg = DynamicConfig(args.s, args.t, seed=seed + i)
        layers.append((cfg, LayerParams(theta, activation=args.activation)))
        d = theta.shape[1]
    return io.matrix_csv(dshgnn_forward(X, layers))


def _rule_layers(rng, d: int, L: int, K: int, activation: str) -> list[RuleLayer]:
    return [RuleLayer(tuple(Rule(_random_matrix(rng, 2 * d, d), 0.1 * rng.standard_normal(d))
                            for _ in range(K)), activation) for _ in range(L)]


def cmd_fgnn(args) -> str:
    g = _annotated(_load(args), "fuzzy", args.strict)
    X = _features(args, len(g.vertices))
    rng = rng_from_seed(_require_seed(args))
    layers = _rule_layers(rng, X.shape[1], args.layers, args.rules, args.activation)
    return io.matrix_csv(fgnn_forward(g, X, layers))


def cmd_ngnn(args) -> str:
    g = _annotated(_load(args), "neutrosophic", args.strict)
    X = _features(args, len(g.vertices))
    rng = rng_from_seed(_require_seed(args))
    layers = _rule_layers(rng, X.shape[1], args.layers, args.rules, args.activation)
    return io.matrix_csv(ngnn_forward(g, X, layers))


def cmd_pgnn(args) -> str:
    g = _annotated(_load(args), "plithogenic", args.strict)
    X = _features(args, len(g.vertices))
    rng = rng_from_seed(_require_seed(args))
    d = X.shape[1]
    layers = [PGNNLayer(_random_matrix(rng, 2 * d, d), 0.1 * rng.standard_normal(d),
                        args.activation) for _ in range(args.layers)]
    return io.matrix_csv(pgnn_forward(g, X, layers))


def cmd_fhgnn(args) -> str:
    fh = _fuzzy(_load(args))
    X = _features(args, len(fh.vertices))
    p = LayerParams(_theta(args, X.shape[1], {}), activation=args.activation)
    return io.matrix_csv(fhgnn_convolve(fh, X, p))


def cmd_ccut(args) -> str:
    return io.dumps(io.hypergraph_data(c_cut(_fuzzy(_load(args)), args.c))) + "\n"


def cmd_walk(args) -> str:
    seed = _require_seed(args)
    shg = _load(args).shg
    g = expand(shg) if args.on_expanded else shg
    gamma = None
    if args.gamma:
        raw = _read_json_arg(args.gamma)
        gamma = {int(k): v for k, v in raw.items()}
    k = transition_kernel(g, gamma, args.dangling)
    return "".join(s + "\n" for s in simulate(k, WalkConfig(args.start, args.steps, seed)))


def cmd_stationary(args) -> str:
    if args.matrix:
        k = kernel_from_matrix(io.read_matrix(args.matrix))
    elif args.graph:
        shg = _load(args).shg
        k = transition_kernel(expand(shg) if args.on_expanded else shg, None, args.dangling)
    else:
        raise UsageError("give a graph file or --matrix")
    pi = stationary(k, args.tolerance if args.tolerance is not None else 1e-12)
    return io.rows_csv(zip(k.states, (float(x) for x in pi)))


def cmd_partition(args) -> str:
    seed = _require_seed(args)
    p = multilevel_partition(_load(args).shg, args.k, args.c, seed, args.objective,
                             args.on_expanded)
    return io.rows_csv(zip(p.vertices, p.assignment))


def cmd_cluster(args) -> str:
    seed = _require_seed(args)
    p = ncut_spectral(expand(_load(args).shg), args.k, seed)
    return io.rows_csv(zip(p.vertices, p.assignment))


def cmd_centrality(args) -> str:
    shg = _load(args).shg
    return io.rows_csv(zip(shg.base_vertices, (float(x) for x in degree_centrality(shg))))


def cmd_turan(args) -> str:
    F = _pattern(_load(args, args.pattern)) if args.pattern else triangle()
    if F.r != args.r:
        raise ValueError(f"pattern is {F.r}-uniform, not {args.r}-uniform")
    res = turan_number(args.N, args.r, F)
    return io.dumps({"ex": res.ex, "witness": _pattern_doc(res.witness)}) + "\n"


def cmd_ffree(args) -> str:
    G = _pattern_from_path(args, args.graph)
    F = _pattern_from_path(args, args.pattern)
    return "false\n" if contains_pattern(G, F) else "true\n"


def _pattern_from_path(args, path) -> UniformHypergraphPattern:
    return _pattern(_load(args, path))


def cmd_bdtree(args) -> str:
    table = _read_json_arg(args.table)
    if not isinstance(table, list) or not all(v in (0, 1) for v in table):
        raise ValueError("truth table must be a JSON array of bits")
    m = max(len(table).bit_length() - 1, 0)
    order = args.order.split(",") if args.order else [f"x{i + 1}" for i in range(m)]
    tree = build_decision_tree(table, order)
    if args.evaluate is not None:
        bits = [int(b) for b in args.evaluate.split(",")] if args.evaluate else []
        return f"{evaluate(tree, bits)}\n"
    return io.dumps({"order": list(tree.order), "tree": _tree_data(tree.root)}) + "\n"


# --- parser ----------------------------------------------------------------

def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = argparse.SUPPRESS if suppress else None
    p.add_argument("--seed", type=_u64, default=d, help="unsigned 64-bit seed")
    p.add_argument("--strict", action="store_true",
                   default=argparse.SUPPRESS if suppress else False,
                   help="reject unknown fields and check edge inequalities")
    p.add_argument("--out", default=d, help="write output here instead of stdout")
    p.add_argument("--tolerance", type=float, default=d,
                   help="power-iteration tolerance for stationary (default 1e-12)")


def _u64(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="superhypergraph", allow_abbrev=False,
                                     description="SuperHyperGraph toolkit")
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, graph=True):
        sp = sub.add_parser(name, help=help_, allow_abbrev=False)
        _global_flags(sp, suppress=True)
        if graph:
            sp.add_argument("graph")
        sp.set_defaults(func=func)
        return sp

    def neural(sp, theta=True):
        sp.add_argument("--features", required=True, help="CSV feature matrix")
        if theta:
            sp.add_argument("--theta", help="CSV weight matrix")
            sp.add_argument("--out-dim", type=int, dest="out_dim")
        sp.add_argument("--activation", choices=ACTIVATIONS, default="relu")

    add("validate", cmd_validate, "check a graph document")
    add("expand", cmd_expand, "print the expanded hypergraph")
    sp = add("laplacian", cmd_laplacian, "normalized Laplacian as CSV")
    sp.add_argument("--propagator", action="store_true", help="print I - Laplacian instead")
    neural(add("convolve", cmd_convolve, "one spectral convolution layer"))
    sp = add("forward", cmd_forward, "stacked convolution with softmax readout")
    neural(sp, theta=False)
    sp.add_argument("--theta", action="append", dest="theta_list", default=[])
    sp.add_argument("--dims", help="comma-separated layer widths for seeded weights")
    sp = add("attention", cmd_attention, "attention-weighted convolution")
    neural(sp)
    sp.set_defaults(activation="identity")
    sp.add_argument("--a", help="CSV attention vector of length 2 * out-dim")
    sp = add("dshgnn", cmd_dshgnn, "dynamic construction plus convolution", graph=False)
    neural(sp)
    sp.add_argument("--s", type=int, required=True, help="number of supervertices")
    sp.add_argument("--t", type=int, required=True, help="number of superedges")
    sp.add_argument("--layers", type=int, default=1)
    for name, func in (("fgnn", cmd_fgnn), ("ngnn", cmd_ngnn)):
        sp = add(name, func, f"{name} forward pass with seeded rules")
        neural(sp, theta=False)
        sp.add_argument("--layers", type=int, default=1)
        sp.add_argument("--rules", type=int, default=2)
    sp = add("pgnn", cmd_pgnn, "plithogenic forward pass with seeded weights")
    neural(sp, theta=False)
    sp.add_argument("--layers", type=int, default=1)
    neural(add("fhgnn", cmd_fhgnn, "fuzzy hypergraph convolution"))
    sp = add("ccut", cmd_ccut, "c-level cut of the fuzzy hypergraph")
    sp.add_argument("-c", type=float, required=True)
    sp = add("walk", cmd_walk, "simulate a random walk")
    sp.add_argument("--start", required=True)
    sp.add_argument("--steps", type=int, required=True)
    sp.add_argument("--on-expanded", action="store_true", dest="on_expanded")
    sp.add_argument("--dangling", choices=("error", "lazy"), default="error")
    sp.add_argument("--gamma", help="JSON (or file) mapping edge position to vertex weights")
    sp = sub.add_parser("stationary", help="stationary distribution as CSV", allow_abbrev=False)
    _global_flags(sp, suppress=True)
    sp.add_argument("graph", nargs="?")
    sp.add_argument("--matrix", help="CSV transition matrix")
    sp.add_argument("--on-expanded", action="store_true", dest="on_expanded")
    sp.add_argument("--dangling", choices=("error", "lazy"), default="error")
    sp.set_defaults(func=cmd_stationary)
    sp = add("partition", cmd_partition, "multilevel k-way partition as CSV")
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("-c", type=float, default=1.0)
    sp.add_argument("--objective", choices=("cut", "soed"), default="cut")
    sp.add_argument("--on-expanded", action="store_true", dest="on_expanded")
    sp = add("cluster", cmd_cluster, "spectral normalized-cut clustering as CSV")
    sp.add_argument("-k", type=int, required=True)
    add("centrality", cmd_centrality, "degree centrality of base vertices as CSV")
    sp = add("turan", cmd_turan, "exhaustive Turan number", graph=False)
    sp.add_argument("-N", type=int, required=True)
    sp.add_argument("-r", type=int, default=2)
    sp.add_argument("--pattern", help="pattern graph document (default: triangle)")
    sp = add("ffree", cmd_ffree, "print true if the graph has no copy of the pattern")
    sp.add_argument("pattern")
    sp = add("bdtree", cmd_bdtree, "complete binary decision tree", graph=False)
    sp.add_argument("--table", required=True, help="JSON bit array or a file holding one")
    sp.add_argument("--order", help="comma-separated variable order")
    sp.add_argument("--evaluate", help="comma-separated bits to evaluate")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, KeyError, np.linalg.LinAlgError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"error: {msg}", file=sys.stderr)
        return 1
    code = 0
    if isinstance(result, tuple):
        result, code = result
    if args.out:
        Path(args.out).write_text(result, encoding="utf-8")
    else:
        sys.stdout.write(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
