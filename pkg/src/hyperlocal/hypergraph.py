"""Immutable hypergraph with generalized cut and ratio-cut objectives."""

from __future__ import annotations

import logging
import math
import warnings
from collections.abc import Callable, Iterable, Sequence

import numpy as np

from .splitting import CardinalitySplitting, all_or_nothing

__all__ = ["Hypergraph", "InvalidNodeError", "overlap_positive"]

logger = logging.getLogger(__name__)

REL_TOL = 1e-9


class InvalidNodeError(IndexError):
    pass


def overlap_positive(omega, inside_volume):
    """``omega > 0`` up to rounding relative to ``vol(S & R)``.

    At the smallest admissible locality parameter the overlap of a whole
    component is exactly zero in theory but lands on either side of zero in
    floating point.
    """
    return omega > REL_TOL * inside_volume


class Hypergraph:
    """Hypergraph on dense node ids ``0..n-1`` with one splitting function per edge.

    Parameters
    ----------
    n : int
        Number of nodes.
    edges : iterable of iterables of int
        Hyperedges.  Duplicate ids inside an edge are merged; edges left with
        fewer than two nodes are dropped (their penalty is identically zero).
        Repeated edges are kept and their penalties add up.
    splitting : callable or sequence, optional
        Either a factory ``(k, weight) -> CardinalitySplitting`` or one
        splitting function per input edge.  Defaults to all-or-nothing.
    weights : sequence of float, optional
        Per-edge weights handed to the factory.  Defaults to 1.

    All objectives only touch edges incident to the query set, so they stay
    cheap for small sets inside very large hypergraphs.
    """

    def __init__(
        self,
        n: int,
        edges: Iterable[Iterable[int]],
        splitting: Callable | Sequence[CardinalitySplitting] | None = None,
        weights: Sequence[float] | None = None,
    ):
        n = int(n)
        if n < 0:
            raise ValueError("node count must be nonnegative")
        raw = list(edges)
        if weights is not None and len(weights) != len(raw):
            raise ValueError("weights must align with edges")
        per_edge = splitting if (splitting is not None and not callable(splitting)) else None
        if per_edge is not None and len(per_edge) != len(raw):
            raise ValueError("per-edge splitting functions must align with edges")
        factory = splitting if callable(splitting) else all_or_nothing

        kept: list[tuple[int, ...]] = []
        kept_w: list[float] = []
        funcs: list[CardinalitySplitting] = []
        dropped = 0
        for i, e in enumerate(raw):
            members = tuple(sorted({int(v) for v in e}))
            if members and (members[0] < 0 or members[-1] >= n):
                raise InvalidNodeError(f"edge {i} has node ids outside [0, {n})")
            if len(members) < 2:
                dropped += 1
                continue
            w = 1.0 if weights is None else float(weights[i])
            if per_edge is not None:
                sf = per_edge[i]
                if sf.k != len(members):
                    raise ValueError(f"edge {i}: splitting is for size {sf.k}, edge has {len(members)}")
            else:
                sf = factory(len(members), w)
            kept.append(members)
            kept_w.append(w)
            funcs.append(sf)
        if dropped:
            logger.warning("dropped %d hyperedges with fewer than two nodes", dropped)

        self.n = n
        self.edges: list[tuple[int, ...]] = kept
        self.weights = np.asarray(kept_w, dtype=float)
        self.splitting: list[CardinalitySplitting] = funcs
        self.dropped_edges = dropped

        sizes = np.fromiter((len(e) for e in kept), dtype=np.int64, count=len(kept))
        flat = np.fromiter((v for e in kept for v in e), dtype=np.int64, count=int(sizes.sum()))
        owner = np.repeat(np.arange(len(kept), dtype=np.int64), sizes)
        order = np.argsort(flat, kind="stable")
        self._inc_ptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(flat, minlength=n), out=self._inc_ptr[1:])
        self._inc = owner[order]

        singleton = np.fromiter((sf.table[1] for sf in funcs), dtype=float, count=len(funcs))
        self.degrees = np.bincount(flat, weights=np.repeat(singleton, sizes), minlength=n)
        self.total_volume = float(self.degrees.sum())
        self.max_edge_size = int(sizes.max()) if len(kept) else 0
        self._sizes = sizes

    # ------------------------------------------------------------------ access

    def __repr__(self):
        return f"Hypergraph(n={self.n}, m={len(self.edges)}, max_edge_size={self.max_edge_size})"

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def _check(self, v: int) -> int:
        v = int(v)
        if not 0 <= v < self.n:
            raise InvalidNodeError(f"node {v} outside [0, {self.n})")
        return v

    def incidence(self, v: int) -> list[int]:
        """Edge ids containing ``v``."""
        v = self._check(v)
        return self._inc[self._inc_ptr[v] : self._inc_ptr[v + 1]].tolist()

    def edge_count(self, v: int) -> int:
        v = self._check(v)
        return int(self._inc_ptr[v + 1] - self._inc_ptr[v])

    def incident_edges(self, s: Iterable[int]) -> set[int]:
        """E(S): every edge touching at least one node of ``s``."""
        out: set[int] = set()
        for v in s:
            out.update(self.incidence(v))
        return out

    def complement(self, s: Iterable[int]) -> frozenset[int]:
        return frozenset(range(self.n)).difference(s)

    def is_uniform(self, k: int) -> bool:
        return bool(np.all(self._sizes == k))

    def with_splitting(self, factory: Callable) -> Hypergraph:
        """Same edges and weights, new splitting functions from ``factory(k, w)``."""
        return Hypergraph(self.n, self.edges, splitting=factory, weights=self.weights)

    # -------------------------------------------------------------- objectives

    def degree(self, v: int) -> float:
        return float(self.degrees[self._check(v)])

    def volume(self, s: Iterable[int]) -> float:
        idx = np.fromiter(s, dtype=np.int64)
        if idx.size and (idx.min() < 0 or idx.max() >= self.n):
            raise InvalidNodeError("node set has ids outside the hypergraph")
        return float(self.degrees[idx].sum())

    def cut(self, s: Iterable[int]) -> float:
        s = s if isinstance(s, (set, frozenset)) else set(s)
        total = 0.0
        for e in self.incident_edges(s):
            members = self.edges[e]
            inside = sum(1 for u in members if u in s)
            total += self.splitting[e](inside)
        return total

    def boundary(self, s: Iterable[int]) -> list[int]:
        """Ids of edges with nodes on both sides of ``s``."""
        s = s if isinstance(s, (set, frozenset)) else set(s)
        out = []
        for e in sorted(self.incident_edges(s)):
            inside = sum(1 for u in self.edges[e] if u in s)
            if 0 < inside < len(self.edges[e]):
                out.append(e)
        return out

    def conductance(self, s: Iterable[int]) -> float:
        s = frozenset(s)
        vol = self.volume(s)
        denom = min(vol, self.total_volume - vol)
        if denom <= 0:
            return math.inf
        return self.cut(s) / denom

    def ncut(self, s: Iterable[int]) -> float:
        s = frozenset(s)
        vol = self.volume(s)
        other = self.total_volume - vol
        if vol <= 0 or other <= 0:
            return math.inf
        c = self.cut(s)
        return c / vol + c / other

    def neighborhood(self, s: Iterable[int]) -> frozenset[int]:
        out: set[int] = set()
        for e in self.incident_edges(s):
            out.update(self.edges[e])
        return frozenset(out)

    def omega(self, r: Iterable[int], eps: float, s: Iterable[int]) -> float:
        """Overlap ``vol(S & R) - eps * vol(S - R)``."""
        r = r if isinstance(r, (set, frozenset)) else set(r)
        s = frozenset(s)
        inside = self.volume(s & r)
        return inside - eps * (self.volume(s) - inside)

    def hlc(self, r: Iterable[int], eps: float, s: Iterable[int]) -> float:
        """Localized conductance ``cut(S) / omega(S)``, infinite when omega <= 0."""
        r = frozenset(r)
        self._warn_small_eps(r, eps)
        s = frozenset(s)
        om = self.omega(r, eps, s)
        if not overlap_positive(om, self.volume(s & r)):
            return math.inf
        return self.cut(s) / om

    def min_locality(self, r: Iterable[int]) -> float:
        """Smallest admissible locality parameter ``vol(R) / vol(V \\ R)``."""
        vr = self.volume(frozenset(r))
        rest = self.total_volume - vr
        return math.inf if rest <= 0 else vr / rest

    def _warn_small_eps(self, r, eps):
        eps0 = self.min_locality(r)
        if eps < eps0 * (1 - REL_TOL):
            warnings.warn(
                f"eps={eps:g} is below vol(R)/vol(V-R)={eps0:g}; guarantees do not apply",
                stacklevel=3,
            )
