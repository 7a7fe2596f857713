"""Rigidity and apicity of near-planar graphs."""

import json

from ._core import (
    Graph,
    NearplanarError,
    apicity_profile,
    canonical_graph6,
    catalog,
    catalog_names,
    check_sparsity,
    connectivity,
    edge_apicity,
    enumerate_connected,
    gcr,
    generic_rank,
    globally_rigid_verdict,
    is_circuit,
    is_independent,
    is_planar,
    is_rigid,
    is_sparse_36,
    is_triangulation,
    isomorphic,
    kuratowski_witness,
    rule_ids,
    tabulate,
    unique_circuit,
    vertex_apicity,
)
from . import _core

__all__ = [
    "Graph",
    "NearplanarError",
    "apicity_profile",
    "canonical_graph6",
    "catalog",
    "catalog_names",
    "check_sparsity",
    "classify",
    "connectivity",
    "edge_apicity",
    "enumerate_connected",
    "from_networkx",
    "gcr",
    "generic_rank",
    "globally_rigid_verdict",
    "is_circuit",
    "is_independent",
    "is_planar",
    "is_rigid",
    "is_sparse_36",
    "is_triangulation",
    "isomorphic",
    "kuratowski_witness",
    "rule_ids",
    "tabulate",
    "to_networkx",
    "unique_circuit",
    "verify",
    "vertex_apicity",
]


def classify(g, seed=0):
    """Classification report as a dict (same fields as the CLI's JSONL)."""
    return json.loads(_core.classify_json(g, seed))


def verify(rule, census, jobs=1):
    """Verification report as a dict; `rule` is a rule id or "all"."""
    return json.loads(_core.verify_json(rule, list(census), jobs))


def to_networkx(g):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.order()))
    h.add_edges_from(g.edges())
    return h


def from_networkx(h):
    nodes = list(h.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), [(index[u], index[v]) for u, v in h.edges() if u != v])
