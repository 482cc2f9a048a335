"""Directed-graph encoding of the localized hypergraph s-t cut problem.

Every hyperedge with a (scaled) delta-linear splitting function becomes a
two-node gadget; nodes of the reference set hang off the source and the
remaining nodes off the sink, weighted by their hypergraph degree.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass, field

from .hypergraph import Hypergraph
from .maxflow import FlowNetwork
from .splitting import CardinalitySplitting, UnsupportedSplittingError

__all__ = ["InvalidSeedError", "StCutInstance", "build_st_instance", "gadget_expand", "st_cut_value"]

SOURCE, SINK = 0, 1


class InvalidSeedError(ValueError):
    pass


def gadget_expand(net: FlowNetwork, nodes: Iterable[int], sf: CardinalitySplitting) -> tuple[int, int]:
    """Add the delta-linear gadget for one hyperedge and return its auxiliary pair.

    ``nodes`` are network node ids of the hyperedge members.  Arcs: each
    member -> v' and v'' -> member with capacity ``scale``, and v' -> v''
    with capacity ``scale * delta``.
    """
    form = sf.linear_form()
    if form is None:
        raise UnsupportedSplittingError(f"no gadget for splitting table {sf.table}")
    delta, scale = form
    v1 = net.add_node()
    v2 = net.add_node()
    net.add_arc(v1, v2, scale * delta)
    for v in nodes:
        net.add_arc(v, v1, scale)
        net.add_arc(v2, v, scale)
    return v1, v2


@dataclass
class StCutInstance:
    net: FlowNetwork
    node_map: dict[int, int]
    aux: dict[int, tuple[int, int]]
    alpha: float
    eps: float
    seeds: frozenset[int] = field(default_factory=frozenset)
    value: float | None = None

    def solve(self) -> tuple[float, frozenset[int]]:
        """Max-flow value and the minimal source side, as hypergraph nodes."""
        self.value = self.net.max_flow()
        side = self.net.min_cut_source_side()
        back = {w: v for v, w in self.node_map.items()}
        return self.value, frozenset(back[w] for w in side if w in back)


def build_st_instance(
    h: Hypergraph,
    r: Iterable[int],
    eps: float,
    alpha: float,
    seeds: Iterable[int] = (),
    nodes: Iterable[int] | None = None,
    edges: Iterable[int] | None = None,
) -> StCutInstance:
    """Encode the s-t cut problem on the (sub-)hypergraph given by ``nodes``/``edges``.

    With ``nodes`` and ``edges`` left as None the whole hypergraph is used.
    Terminal capacities always use degrees from the full hypergraph.
    """
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    r = frozenset(r)
    seeds = frozenset(seeds)
    if not seeds <= r:
        raise InvalidSeedError("seed nodes must belong to the reference set")
    nodes = range(h.n) if nodes is None else sorted(nodes)
    edges = range(h.num_edges) if edges is None else sorted(edges)

    net = FlowNetwork(2, SOURCE, SINK)
    ids = net.add_nodes(len(nodes))
    node_map = dict(zip(nodes, ids))
    degrees = h.degrees
    for v, w in node_map.items():
        if v in r:
            net.add_arc(SOURCE, w, math.inf if v in seeds else alpha * degrees[v])
        else:
            net.add_arc(w, SINK, alpha * eps * degrees[v])
    aux = {}
    for e in edges:
        aux[e] = gadget_expand(net, [node_map[v] for v in h.edges[e]], h.splitting[e])
    return StCutInstance(net, node_map, aux, alpha, eps, seeds)


def st_cut_value(h: Hypergraph, r: Iterable[int], eps: float, alpha: float, s: Iterable[int]) -> float:
    """``cut(S) + alpha * vol(R - S) + alpha * eps * vol(S - R)`` on the full hypergraph."""
    r = frozenset(r)
    s = frozenset(s)
    return h.cut(s) + alpha * h.volume(r - s) + alpha * eps * h.volume(s - r)
