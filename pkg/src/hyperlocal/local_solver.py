"""Strongly-local minimum s-t cut: alternate between solving on a small
local hypergraph and growing it around nodes whose sink edge gets cut."""

from __future__ import annotations

import json
import logging
from collections.abc import Iterable
from dataclasses import asdict, dataclass, field

from .hypergraph import Hypergraph
from .reduction import build_st_instance

__all__ = [
    "LocalHypergraph",
    "RoundStats",
    "SolveStats",
    "locality_bounds",
    "solve_global",
    "solve_strongly_local",
    "strip_isolated",
]

logger = logging.getLogger(__name__)


@dataclass
class LocalHypergraph:
    """Materialized part of the auxiliary hypergraph.

    ``nodes`` always contains R and its neighborhood, ``edges`` every edge
    touching R or an explored node.  Terminal edges are implied by ``nodes``.
    """

    reference: frozenset[int]
    nodes: set[int]
    edges: set[int]
    explored: set[int] = field(default_factory=set)

    @classmethod
    def around(cls, h: Hypergraph, r: Iterable[int]) -> LocalHypergraph:
        r = frozenset(r)
        return cls(r, set(r | h.neighborhood(r)), h.incident_edges(r))

    def grow(self, h: Hypergraph, newly_cut: Iterable[int]) -> LocalHypergraph:
        """Explore ``newly_cut``: pull in their incident edges and neighbors."""
        newly_cut = set(newly_cut) - self.explored
        for v in newly_cut:
            for e in h.incidence(v):
                if e not in self.edges:
                    self.edges.add(e)
                    self.nodes.update(h.edges[e])
        self.explored |= newly_cut
        return self


@dataclass
class RoundStats:
    nodes: int
    edges: int
    explored: int
    flow: float
    newly_explored: int


@dataclass
class SolveStats:
    alpha: float
    rounds: list[RoundStats] = field(default_factory=list)
    cut_value: float = 0.0
    explored_volume: float = 0.0
    reference_volume: float = 0.0
    stripped: int = 0

    @property
    def n_rounds(self) -> int:
        return len(self.rounds)

    @property
    def max_nodes(self) -> int:
        return max((r.nodes for r in self.rounds), default=0)

    @property
    def max_edges(self) -> int:
        return max((r.edges for r in self.rounds), default=0)

    def to_json_lines(self) -> str:
        return "\n".join(json.dumps({"alpha": self.alpha, "round": i, **asdict(r)}) for i, r in enumerate(self.rounds))


def strip_isolated(h: Hypergraph, r: Iterable[int]) -> tuple[frozenset[int], int]:
    """Drop reference nodes with zero degree; returns the kept set and drop count."""
    r = frozenset(r)
    kept = frozenset(v for v in r if h.degrees[v] > 0)
    if len(kept) < len(r):
        logger.warning("removed %d isolated nodes from the reference set", len(r) - len(kept))
    return kept, len(r) - len(kept)


def solve_strongly_local(
    h: Hypergraph,
    r: Iterable[int],
    eps: float,
    alpha: float,
    seeds: Iterable[int] = (),
) -> tuple[frozenset[int], SolveStats]:
    """Minimum s-t cut of the auxiliary hypergraph without building all of it.

    Returns the minimal minimizing set and per-round statistics.  The set
    minimizes ``cut(S) + alpha*vol(R - S) + alpha*eps*vol(S - R)`` over all
    subsets of the hypergraph even though only a local piece is materialized.
    """
    if eps <= 0 or alpha <= 0:
        raise ValueError("eps and alpha must be positive")
    r, stripped = strip_isolated(h, r)
    seeds = frozenset(seeds) & r
    if not r:
        raise ValueError("reference set has no non-isolated nodes")
    local = LocalHypergraph.around(h, r)
    stats = SolveStats(alpha=alpha, reference_volume=h.volume(r), stripped=stripped)

    while True:
        inst = build_st_instance(h, r, eps, alpha, seeds, local.nodes, local.edges)
        flow, side = inst.solve()
        frontier = (side - r) - local.explored
        stats.rounds.append(RoundStats(len(local.nodes), len(local.edges), len(local.explored), flow, len(frontier)))
        if not frontier:
            break
        local.grow(h, frontier)

    stats.cut_value = flow
    stats.explored_volume = h.volume(local.explored)
    return side, stats


def solve_global(
    h: Hypergraph, r: Iterable[int], eps: float, alpha: float, seeds: Iterable[int] = ()
) -> tuple[float, frozenset[int]]:
    """Build the reduction of the whole hypergraph at once and solve it."""
    r, _ = strip_isolated(h, r)
    inst = build_st_instance(h, r, eps, alpha, frozenset(seeds) & r)
    return inst.solve()


def locality_bounds(h: Hypergraph, r: Iterable[int], eps: float) -> dict[str, float]:
    """Size limits on the local hypergraph for unit-scaled penalties.

    Valid when the smallest nonzero penalty of every edge is 1 and R has no
    isolated nodes.
    """
    vol_r = h.volume(frozenset(r))
    grow = 1 + 1 / eps
    return {
        "edges": 1.5 * grow * vol_r,
        "nodes": h.max_edge_size * vol_r * grow,
        "explored_volume": vol_r / eps,
    }
