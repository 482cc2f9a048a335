"""Strongly local clustering in hypergraphs with cardinality-based cut penalties."""

from .baselines import best_neighbors, clique_expand, flowseed_equivalent, top_neighbors
from .estimators import BestNeighbors, CliqueExpansion, FlowSeed, HyperLocal, TopNeighbors
from .hlc import ClusterReport, TraceEntry, minimize_hlc
from .hypergraph import Hypergraph, InvalidNodeError
from .io import DatasetParseError, LabeledDataset, load_hypergraph, save_dataset
from .local_solver import LocalHypergraph, solve_global, solve_strongly_local
from .maxflow import FlowNetwork
from .metrics import f1_metrics
from .splitting import CardinalitySplitting, all_or_nothing, clique_penalty, delta_linear

__version__ = "0.1.0"

__all__ = [
    "BestNeighbors",
    "CardinalitySplitting",
    "CliqueExpansion",
    "ClusterReport",
    "DatasetParseError",
    "FlowNetwork",
    "FlowSeed",
    "HyperLocal",
    "Hypergraph",
    "InvalidNodeError",
    "LabeledDataset",
    "LocalHypergraph",
    "TopNeighbors",
    "TraceEntry",
    "all_or_nothing",
    "best_neighbors",
    "clique_expand",
    "clique_penalty",
    "delta_linear",
    "f1_metrics",
    "flowseed_equivalent",
    "load_hypergraph",
    "minimize_hlc",
    "save_dataset",
    "solve_global",
    "solve_strongly_local",
    "top_neighbors",
]
