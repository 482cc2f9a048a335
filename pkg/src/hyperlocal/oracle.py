"""Exhaustive ground truth for small hypergraphs.

Every subset is encoded as a bitmask and all objectives are evaluated for
all masks at once.  Degrees and cuts are recomputed here from the raw
edge lists and penalty tables, independently of ``Hypergraph`` methods.
Ties go to the smallest mask.
"""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np

from .hypergraph import Hypergraph

__all__ = ["MAX_NODES", "OracleCapError", "brute_min_conductance", "brute_min_hlc", "brute_min_st_cut"]

MAX_NODES = 20


class OracleCapError(ValueError):
    pass


def _mask(nodes: Iterable[int]) -> int:
    m = 0
    for v in nodes:
        m |= 1 << int(v)
    return m


def _members(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


class _Tables:
    def __init__(self, h: Hypergraph):
        if h.n > MAX_NODES:
            raise OracleCapError(f"oracle enumerates 2^n subsets and is capped at n <= {MAX_NODES}")
        self.n = h.n
        self.masks = np.arange(1 << h.n, dtype=np.int64)
        deg = np.zeros(h.n)
        cut = np.zeros(self.masks.size)
        for e, sf in zip(h.edges, h.splitting):
            k = len(e)
            full = np.array([sf.table[min(i, k - i)] for i in range(k + 1)])
            for v in e:
                deg[v] += full[1]
            inside = np.bitwise_count(self.masks & _mask(e))
            cut += full[inside]
        self.degrees = deg
        self.cut = cut
        self.vol = np.zeros(self.masks.size)
        for v in range(h.n):
            self.vol += deg[v] * ((self.masks >> v) & 1)
        self.total = deg.sum()

    def vol_of(self, mask_r: int) -> np.ndarray:
        return self.vol[self.masks & mask_r]


def brute_min_hlc(h: Hypergraph, r: Iterable[int], eps: float) -> tuple[float, frozenset[int]]:
    """Smallest localized conductance over nonempty sets with positive overlap."""
    tab = _Tables(h)
    mr = _mask(r)
    inside = tab.vol_of(mr)
    outside = tab.vol - inside
    omega = inside - eps * outside
    # same rounding guard as Hypergraph.hlc, relative to vol(S & R)
    ok = omega > 1e-9 * inside
    ok[0] = False
    if not ok.any():
        raise ValueError("no set has positive overlap with the reference set")
    ratio = np.full(tab.masks.size, np.inf)
    ratio[ok] = tab.cut[ok] / omega[ok]
    best = int(np.argmin(ratio))
    return float(ratio[best]), _members(best)


def brute_min_st_cut(h: Hypergraph, r: Iterable[int], eps: float, alpha: float) -> tuple[float, frozenset[int]]:
    """Smallest ``cut(S) + alpha*vol(R - S) + alpha*eps*vol(S - R)`` over all S, empty set included."""
    tab = _Tables(h)
    mr = _mask(r)
    inside = tab.vol_of(mr)
    value = tab.cut + alpha * (tab.vol[mr] - inside) + alpha * eps * (tab.vol - inside)
    best = int(np.argmin(value))
    return float(value[best]), _members(best)


def brute_min_conductance(h: Hypergraph) -> tuple[float, frozenset[int]]:
    """Smallest conductance over nonempty proper subsets."""
    tab = _Tables(h)
    denom = np.minimum(tab.vol, tab.total - tab.vol)
    ratio = np.full(tab.masks.size, np.inf)
    ok = denom > 0
    ratio[ok] = tab.cut[ok] / denom[ok]
    best = int(np.argmin(ratio))
    if not np.isfinite(ratio[best]):
        raise ValueError("every proper subset has zero volume on one side")
    return float(ratio[best]), _members(best)
