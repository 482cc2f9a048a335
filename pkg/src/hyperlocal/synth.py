"""Synthetic hypergraphs with planted clusters.

Node ids are shuffled so cluster membership never lines up with id order,
which keeps id-based tie-breaking from favoring any method.
"""

from __future__ import annotations

import math

import numpy as np

from .hypergraph import Hypergraph
from .io import LabeledDataset
from .splitting import all_or_nothing

__all__ = ["synth_planted", "synth_scaling", "synth_delta_mode"]


def _pairs_per_edge(lo, hi):
    ks = np.arange(lo, hi + 1)
    return float(np.mean(ks * (ks - 1) / 2))


def synth_planted(
    n_nodes: int,
    n_clusters: int,
    cluster_size,
    edge_size_range=(3, 6),
    p_in: float = 0.2,
    p_cross: float = 0.01,
    seed: int = 0,
    noise: float = 0.0,
    cross_size_range=None,
    splitting=all_or_nothing,
) -> LabeledDataset:
    """Planted-partition hypergraph.

    ``p_in`` and ``p_cross`` are the expected fractions of node pairs
    covered by some edge, inside a cluster and across the whole node set;
    edge counts are chosen to match them given the edge size range.
    ``cluster_size`` is an int or a ``(lo, hi)`` range sampled per cluster.
    Each member of an internal edge is swapped for a random outside node
    with probability ``noise``.  Nodes beyond the clusters only appear in
    cross edges, whose sizes come from ``cross_size_range`` (defaults to
    ``edge_size_range``).
    """
    rng = np.random.default_rng(seed)
    lo, hi = edge_size_range
    if not 2 <= lo <= hi:
        raise ValueError("edge sizes must satisfy 2 <= lo <= hi")
    if isinstance(cluster_size, (tuple, list)):
        sizes = rng.integers(cluster_size[0], cluster_size[1] + 1, size=n_clusters)
    else:
        sizes = np.full(n_clusters, int(cluster_size))
    if sizes.sum() > n_nodes:
        raise ValueError(f"{sizes.sum()} clustered nodes do not fit in {n_nodes} nodes")
    if min(sizes, default=lo) < lo:
        raise ValueError("clusters must be at least as large as the smallest edge")
    if not (0 <= p_in <= 1 and 0 <= p_cross <= 1 and 0 <= noise < 1):
        raise ValueError("probabilities must lie in [0, 1]")

    perm = rng.permutation(n_nodes)
    bounds = np.concatenate([[0], np.cumsum(sizes)])
    clusters = [perm[bounds[i] : bounds[i + 1]] for i in range(n_clusters)]

    edges = []
    per_edge = _pairs_per_edge(lo, hi)
    for members in clusters:
        s = len(members)
        m = int(round(p_in * s * (s - 1) / 2 / per_edge))
        for _ in range(m):
            k = int(rng.integers(lo, min(hi, s) + 1))
            e = rng.choice(members, size=k, replace=False)
            if noise > 0:
                swap = rng.random(k) < noise
                if swap.any():
                    e = e.copy()
                    e[swap] = rng.integers(0, n_nodes, size=int(swap.sum()))
            edges.append(e.tolist())

    clo, chi = cross_size_range or edge_size_range
    within = int(sum(s * (s - 1) // 2 for s in sizes))
    across = n_nodes * (n_nodes - 1) // 2 - within
    m_cross = int(round(p_cross * across / _pairs_per_edge(clo, chi)))
    for _ in range(m_cross):
        k = int(rng.integers(clo, chi + 1))
        edges.append(rng.choice(n_nodes, size=k, replace=False).tolist())

    order = rng.permutation(len(edges))
    edges = [edges[i] for i in order]
    h = Hypergraph(n_nodes, edges, splitting=splitting)
    labels = {f"c{i}": frozenset(int(v) for v in c) for i, c in enumerate(clusters)}
    meta = {
        "generator": "planted",
        "seed": seed,
        "n_nodes": n_nodes,
        "cluster_sizes": sizes.tolist(),
        "edge_size_range": list(edge_size_range),
        "p_in": p_in,
        "p_cross": p_cross,
        "noise": noise,
    }
    return LabeledDataset(h, labels, [str(i) for i in range(n_nodes)], meta)


def synth_scaling(
    n_nodes: int,
    cluster_size: int = 60,
    cluster_edges: int = 120,
    bridges: int = 12,
    background_degree: float = 3.0,
    edge_size_range=(2, 4),
    seed: int = 0,
) -> LabeledDataset:
    """One fixed planted cluster embedded in a random background of any size.

    The cluster (nodes ``0..cluster_size-1``), its internal edges and the
    number of bridge edges leaving it come from ``seed`` alone, so
    ``vol(cluster)`` is identical for every ``n_nodes``.  The label
    ``"reference"`` holds the first half of the cluster.  Background nodes
    get edges among themselves at a constant average degree.
    """
    lo, hi = edge_size_range
    crng = np.random.default_rng(seed)
    edges = []
    for _ in range(cluster_edges):
        k = int(crng.integers(lo, hi + 1))
        edges.append(crng.choice(cluster_size, size=k, replace=False).tolist())
    bridge_src = crng.integers(0, cluster_size, size=bridges)

    brng = np.random.default_rng([seed, n_nodes])
    rest = n_nodes - cluster_size
    for u in bridge_src:
        edges.append([int(u), int(cluster_size + brng.integers(0, rest))])
    mean_k = (lo + hi) / 2
    m_bg = int(math.ceil(background_degree * rest / mean_k))
    ks = brng.integers(lo, hi + 1, size=m_bg)
    flat = brng.integers(cluster_size, n_nodes, size=int(ks.sum()))
    splits = np.cumsum(ks)[:-1]
    edges.extend(part.tolist() for part in np.split(flat, splits))
    h = Hypergraph(n_nodes, edges)
    labels = {"planted": frozenset(range(cluster_size)), "reference": frozenset(range(cluster_size // 2))}
    meta = {"generator": "scaling", "seed": seed, "n_nodes": n_nodes}
    return LabeledDataset(h, labels, [str(i) for i in range(n_nodes)], meta)


def _add_straddling(ds, n_edges, size_range, seed):
    """Append large edges split roughly evenly between two random clusters."""
    rng = np.random.default_rng([seed, 1])
    clusters = [np.array(sorted(c)) for c in ds.labels.values()]
    h = ds.hypergraph
    edges = [list(e) for e in h.edges]
    for _ in range(n_edges):
        a, b = rng.choice(len(clusters), size=2, replace=False)
        k = int(rng.integers(size_range[0], size_range[1] + 1))
        half = k // 2
        e = np.concatenate(
            [rng.choice(clusters[a], size=half, replace=False), rng.choice(clusters[b], size=k - half, replace=False)]
        )
        edges.append(e.tolist())
    g = Hypergraph(h.n, edges)
    return LabeledDataset(g, ds.labels, ds.ids, {**ds.meta, "straddling_edges": n_edges})


def synth_delta_mode(mode: str, seed: int = 0, n_clusters: int = 6, n_straddle: int = 40) -> LabeledDataset:
    """Generator settings for the splitting-function sweep.

    ``"noisy"``: large hyperedges that mostly sit in one cluster but carry
    random outside members.  ``"clean"``: small edges inside clusters plus
    ``n_straddle`` large edges split evenly across two clusters.
    """
    if mode == "noisy":
        return synth_planted(
            n_nodes=n_clusters * 60 + 200,
            n_clusters=n_clusters,
            cluster_size=60,
            edge_size_range=(10, 24),
            p_in=0.5,
            p_cross=0.0,
            noise=0.3,
            seed=seed,
        )
    if mode == "clean":
        ds = synth_planted(
            n_nodes=n_clusters * 60,
            n_clusters=n_clusters,
            cluster_size=60,
            edge_size_range=(2, 3),
            p_in=0.15,
            p_cross=0.0,
            seed=seed,
        )
        return _add_straddling(ds, n_edges=n_straddle, size_range=(8, 16), seed=seed)
    raise ValueError(f"unknown mode {mode!r}; expected 'noisy' or 'clean'")
