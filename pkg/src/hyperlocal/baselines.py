"""Comparison methods: neighborhood rankings and clique expansion."""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from collections.abc import Iterable

from .hlc import ClusterReport, minimize_hlc
from .hypergraph import Hypergraph
from .splitting import all_or_nothing

__all__ = [
    "best_neighbors",
    "clique_expand",
    "flowseed_equivalent",
    "neighbor_counts",
    "top_neighbors",
]

logger = logging.getLogger(__name__)


def neighbor_counts(h: Hypergraph, seeds: Iterable[int]) -> Counter:
    """For each non-seed neighbor, the number of its edges that touch a seed."""
    seeds = frozenset(seeds)
    counts: Counter = Counter()
    for e in h.incident_edges(seeds):
        for v in h.edges[e]:
            if v not in seeds:
                counts[v] += 1
    return counts


def top_neighbors(h: Hypergraph, seeds: Iterable[int], k: int) -> list[int]:
    """Top ``k`` neighbors of the seeds by number of shared hyperedges.

    Seeds themselves are never listed.  Ties go to the smaller node id.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    counts = neighbor_counts(h, seeds)
    return sorted(counts, key=lambda v: (-counts[v], v))[:k]


def best_neighbors(h: Hypergraph, seeds: Iterable[int], k: int) -> list[int]:
    """Top ``k`` neighbors by the fraction of their hyperedges that touch a seed."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    counts = neighbor_counts(h, seeds)
    frac = {v: c / h.edge_count(v) for v, c in counts.items()}
    return sorted(frac, key=lambda v: (-frac[v], v))[:k]


def clique_expand(h: Hypergraph, weighted: bool = False, max_size: int = 50) -> tuple[Hypergraph, int]:
    """Replace every hyperedge by a clique; returns the graph and the number of discarded edges.

    Hyperedges with ``max_size`` or more nodes are discarded first.  Clique
    edges get weight 1, or ``1/|e|`` when ``weighted``; parallel pairs merge
    by adding weights.  The result is a 2-uniform hypergraph with
    all-or-nothing penalties on the same node set.
    """
    if max_size < 2:
        raise ValueError("max_size must be at least 2")
    pair_weight: dict[tuple[int, int], float] = defaultdict(float)
    discarded = 0
    for e, w in zip(h.edges, h.weights):
        if len(e) >= max_size:
            discarded += 1
            continue
        each = w / len(e) if weighted else w
        for i, u in enumerate(e):
            for v in e[i + 1 :]:
                pair_weight[(u, v)] += each
    if discarded:
        logger.info("clique expansion discarded %d hyperedges with >= %d nodes", discarded, max_size)
    pairs = sorted(pair_weight)
    graph = Hypergraph(h.n, pairs, splitting=all_or_nothing, weights=[pair_weight[p] for p in pairs])
    return graph, discarded


def flowseed_equivalent(
    g: Hypergraph, r: Iterable[int], eps: float, seeds: Iterable[int] = (), **kwargs
) -> ClusterReport:
    """Flow-based local conductance on a graph, i.e. the 2-uniform case of ``minimize_hlc``."""
    if not g.is_uniform(2):
        raise ValueError("flowseed_equivalent expects a 2-uniform hypergraph")
    return minimize_hlc(g, r, eps, seeds, **kwargs)
