"""Print the worked examples bundled in data/ next to their expected values."""

from pathlib import Path

import numpy as np

from superhypergraph.combinatorics import build_decision_tree, triangle, turan_number
from superhypergraph.core import expand
from superhypergraph.io import load, read_matrix
from superhypergraph.partition import degree_centrality, weighted_cut
from superhypergraph.random_walk import kernel_from_matrix, stationary, transition_kernel
from superhypergraph.uncertain import fuzzy_degrees, validate_annotations

DATA = Path(__file__).resolve().parent.parent / "data"


def show(title, got, want):
    print(f"{title:<42} {got!s:<40} expected {want}")


def main():
    shg = load(DATA / "nested_example.json").shg
    edges = [sorted(e.members) for e in expand(shg).hyperedges]
    show("expanded edges", edges, [["x1", "x2", "x3"], ["x1", "x3"]])
    show("degree centrality", degree_centrality(shg).tolist(), [2.0, 1.0, 2.0])

    flat = load(DATA / "flat_example.json").shg
    k = transition_kernel(flat)
    show("walk row of x2", np.round(k.P[k.index("x2")], 6).tolist(), "[1/3, 1/3, 1/3]")
    pi = stationary(kernel_from_matrix(read_matrix(DATA / "weather.csv")))
    show("weather stationary distribution", np.round(pi, 12).tolist(), "(5/6, 1/6)")

    clusters = expand(load(DATA / "clustering_example.json").shg)
    show("inter-cluster weight {A,B,C}|{D,E}", weighted_cut(clusters, [0, 0, 0, 1, 1]), 4)

    for name in ("disease_network.json", "social_fuzzy.json", "plithogenic_triangle.json"):
        problems = validate_annotations(load(DATA / name).annotations, strict=True)
        show(f"{name} strict problems", len(problems), 0)

    fh = load(DATA / "fuzzy_hypergraph.json").fuzzy
    dv, de = fuzzy_degrees(fh)
    show("fuzzy vertex degrees", dv.tolist(), "weighted membership sums")
    show("fuzzy edge degrees", de.tolist(), "membership sums")

    show("ex_2(N, triangle), N=3..6", [turan_number(N, 2, triangle()).ex for N in range(3, 7)],
         [2, 4, 6, 9])
    show("AND decision tree leaves", build_decision_tree([0, 0, 0, 1], ["x1", "x2"]).leaves(),
         [0, 0, 0, 1])


if __name__ == "__main__":
    main()
