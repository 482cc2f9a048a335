"""Cardinality-based hyperedge splitting functions.

A splitting function assigns a penalty to every way of separating the
nodes of a hyperedge.  Cardinality-based functions only look at how many
nodes end up on the smaller side, so they are stored as a short table
``p[0..k//2]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

__all__ = [
    "CardinalitySplitting",
    "UnsupportedSplittingError",
    "all_or_nothing",
    "clique_penalty",
    "delta_linear",
    "is_submodular",
    "parse_splitting",
]

EXHAUSTIVE_MAX_K = 12
SAMPLED_PAIRS = 10_000


class UnsupportedSplittingError(ValueError):
    """Raised when a splitting function has no graph gadget in this package."""


@dataclass(frozen=True)
class CardinalitySplitting:
    """Penalty table indexed by the size of the smaller side of a split.

    ``table[i]`` is the penalty when ``i`` nodes sit on the smaller side of
    an edge with ``k`` nodes.  Symmetry holds by construction since lookups
    go through ``min(c, k - c)``.
    """

    k: int
    table: tuple[float, ...]

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"edge size must be >= 2, got {self.k}")
        if len(self.table) != self.k // 2 + 1:
            raise ValueError(
                f"table for k={self.k} needs {self.k // 2 + 1} entries, got {len(self.table)}"
            )
        if self.table[0] != 0:
            raise ValueError("uncut edges must have zero penalty (table[0] == 0)")
        if any(p < 0 or math.isnan(p) for p in self.table):
            raise ValueError("penalties must be nonnegative")

    def __call__(self, count: int) -> float:
        """Penalty when ``count`` of the edge's nodes are on one side."""
        return self.table[min(count, self.k - count)]

    def evaluate(self, subset, edge) -> float:
        """Evaluate on an explicit subset ``subset`` of ``edge``."""
        edge = set(edge)
        return self(len(edge.intersection(subset)))

    @property
    def singleton(self) -> float:
        return self.table[1]

    def linear_form(self):
        """Return ``(delta, scale)`` if this is a scaled delta-linear table, else None.

        A scaled delta-linear table satisfies ``p[i] = min(scale * i, scale * delta)``.
        When the threshold exceeds ``k // 2`` the table is purely linear and
        ``delta = k // 2`` is returned, which gives the same penalties.
        """
        scale = self.table[1]
        if scale <= 0:
            return None
        top = self.table[-1]
        for i, p in enumerate(self.table):
            if not math.isclose(p, min(scale * i, top), rel_tol=1e-12, abs_tol=0.0):
                return None
        return top / scale, scale


@lru_cache(maxsize=4096)
def delta_linear(k: int, delta: float, scale: float = 1.0) -> CardinalitySplitting:
    """Delta-linear threshold penalty ``scale * min(delta, |A|, |e \\ A|)``."""
    if delta <= 0 or scale <= 0:
        raise ValueError("delta and scale must be positive")
    if delta < 1:
        raise ValueError(f"delta must be >= 1, got {delta}")
    return CardinalitySplitting(k, tuple(scale * min(delta, i) for i in range(k // 2 + 1)))


@lru_cache(maxsize=4096)
def all_or_nothing(k: int, w: float = 1.0) -> CardinalitySplitting:
    if w <= 0:
        raise ValueError("weight must be positive")
    return CardinalitySplitting(k, (0.0,) + (float(w),) * (k // 2))


@lru_cache(maxsize=4096)
def clique_penalty(k: int, w: float = 1.0) -> CardinalitySplitting:
    """Normalized clique penalty ``(w / k) * |A| * |e \\ A|``."""
    if w <= 0:
        raise ValueError("weight must be positive")
    return CardinalitySplitting(k, tuple((w / k) * i * (k - i) for i in range(k // 2 + 1)))


def _set_function_values(sf: CardinalitySplitting) -> np.ndarray:
    counts = np.bitwise_count(np.arange(1 << sf.k, dtype=np.uint32))
    full = np.array([sf(c) for c in range(sf.k + 1)])
    return full[counts]


def _violates(f, a, b, tol) -> bool:
    return f[a] + f[b] < f[a | b] + f[a & b] - tol


def is_submodular(sf: CardinalitySplitting, rng=None, tol: float = 1e-12) -> bool:
    """Check ``w(A) + w(B) >= w(A | B) + w(A & B)`` on the induced set function.

    Exhaustive over all pairs for ``k <= 12``; otherwise a random sample of
    pairs is checked, so ``True`` is probabilistic while ``False`` is backed
    by a witness.
    """
    scale = tol * max(1.0, max(sf.table))
    if sf.k <= EXHAUSTIVE_MAX_K:
        f = _set_function_values(sf)
        masks = np.arange(f.size, dtype=np.int64)
        for a in range(f.size):
            if np.any(f[a] + f < f[a | masks] + f[a & masks] - scale):
                return False
        return True

    rng = np.random.default_rng(rng)
    k = sf.k
    for _ in range(SAMPLED_PAIRS):
        a = rng.random(k) < rng.random()
        b = rng.random(k) < rng.random()
        ca, cb = int(a.sum()), int(b.sum())
        cu, ci = int((a | b).sum()), int((a & b).sum())
        if sf(ca) + sf(cb) < sf(cu) + sf(ci) - scale:
            return False
    return True


def submodularity_witness(sf: CardinalitySplitting):
    """Return a violating pair ``(A, B)`` of index tuples, or None (small k only)."""
    if sf.k > EXHAUSTIVE_MAX_K:
        raise ValueError("witness search is exhaustive and limited to k <= 12")
    idx = range(sf.k)
    subsets = [frozenset(c) for r in range(sf.k + 1) for c in combinations(idx, r)]
    for a in subsets:
        for b in subsets:
            if sf(len(a)) + sf(len(b)) < sf(len(a | b)) + sf(len(a & b)) - 1e-12:
                return tuple(sorted(a)), tuple(sorted(b))
    return None


def parse_splitting(text: str):
    """Parse ``aon[:w]``, ``dlt:delta[:scale]`` or ``clique[:w]``.

    Returns a factory ``(k, weight) -> CardinalitySplitting`` where ``weight``
    is the per-edge weight read from the input file.
    """
    parts = text.strip().split(":")
    kind, args = parts[0].lower(), [float(x) for x in parts[1:]]
    if kind == "aon":
        base = args[0] if args else 1.0
        return lambda k, w=1.0: all_or_nothing(k, base * w)
    if kind == "dlt":
        if not args:
            raise ValueError("dlt needs a threshold, e.g. dlt:5000")
        delta = args[0]
        scale = args[1] if len(args) > 1 else 1.0
        return lambda k, w=1.0: delta_linear(k, delta, scale * w)
    if kind == "clique":
        base = args[0] if args else 1.0
        return lambda k, w=1.0: clique_penalty(k, base * w)
    raise ValueError(f"unknown splitting function {text!r}")
