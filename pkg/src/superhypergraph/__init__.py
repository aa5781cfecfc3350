"""SuperHyperGraph structures, spectral convolution and uncertain-graph networks."""

from .core import (Hyperedge, Hypergraph, Leaf, Nest, NestedElement, Superedge, SuperHyperGraph,
                   canonicalize, expand, expand_element, nested, serialize, validate)
from .shgnn import (DynamicConfig, LayerParams, NetworkConfig, attention_convolve,
                    dynamic_construct, forward, grad_theta, hgnn_convolve, nshgnn_convolve,
                    shgnn_convolve)
from .sparse import incidence_matrix, normalized_laplacian, normalized_propagator

__all__ = [
    "Hyperedge", "Hypergraph", "Leaf", "Nest", "NestedElement", "Superedge", "SuperHyperGraph",
    "canonicalize", "expand", "expand_element", "nested", "serialize", "validate",
    "DynamicConfig", "LayerParams", "NetworkConfig", "attention_convolve", "dynamic_construct",
    "forward", "grad_theta", "hgnn_convolve", "nshgnn_convolve", "shgnn_convolve",
    "incidence_matrix", "normalized_laplacian", "normalized_propagator",
]
