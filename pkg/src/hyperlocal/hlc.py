"""Localized conductance minimization by repeated local s-t cuts."""

from __future__ import annotations

import logging
import math
import warnings
from collections.abc import Iterable
from dataclasses import dataclass, field

from .hypergraph import Hypergraph, overlap_positive
from .local_solver import SolveStats, solve_global, solve_strongly_local, strip_isolated

__all__ = ["ClusterReport", "TraceEntry", "minimize_hlc"]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TraceEntry:
    alpha: float
    cut: float
    omega: float
    size: int


@dataclass
class ClusterReport:
    """Result of one localized conductance minimization.

    ``trace`` holds the reference set followed by every accepted improvement,
    so ``alpha`` strictly decreases along it.  ``iterations`` counts s-t cut
    solves, including the last one that found nothing better.
    """

    best_set: frozenset[int]
    objective: float
    trace: list[TraceEntry]
    iterations: int
    converged: bool
    anchored: bool
    eps: float
    reference: frozenset[int]
    solves: list[SolveStats] = field(default_factory=list)

    @property
    def alphas(self) -> list[float]:
        return [t.alpha for t in self.trace]

    def to_dict(self) -> dict:
        return {
            "best_set": sorted(self.best_set),
            "objective": self.objective,
            "iterations": self.iterations,
            "converged": self.converged,
            "anchored": self.anchored,
            "eps": self.eps,
            "trace": [vars(t) for t in self.trace],
        }


def minimize_hlc(
    h: Hypergraph,
    r: Iterable[int],
    eps: float,
    seeds: Iterable[int] = (),
    tol: float = 1e-8,
    local: bool = True,
    max_iter: int = 10_000,
) -> ClusterReport:
    """Minimize ``cut(S) / (vol(S & R) - eps * vol(S - R))`` starting from R.

    Each pass solves an s-t cut at the current best ratio ``alpha``; a
    nonempty minimizer has a strictly smaller ratio, an empty one means
    nothing beats ``alpha``.  ``seeds`` are forced into every candidate set,
    which keeps the improvement monotone but gives up global optimality.
    ``local=False`` solves each cut on the whole hypergraph instead.
    """
    r_in = frozenset(r)
    if not r_in:
        raise ValueError("reference set is empty")
    r, _ = strip_isolated(h, r_in)
    if not r:
        raise ValueError("every reference node is isolated")
    seeds = frozenset(seeds)
    if not seeds <= r_in:
        raise ValueError("seed nodes must belong to the reference set")
    seeds &= r
    if eps <= 0:
        raise ValueError("eps must be positive")

    vol_r = h.volume(r)
    if vol_r > h.total_volume - vol_r:
        warnings.warn("vol(R) exceeds vol(V - R); ratio-cut guarantees assume the reverse", stacklevel=2)
    eps0 = h.min_locality(r)
    if eps < eps0 * (1 - 1e-9):
        warnings.warn(f"eps={eps:g} is below vol(R)/vol(V-R)={eps0:g}; guarantees do not apply", stacklevel=2)

    def entry(s):
        c = h.cut(s)
        om = h.omega(r, eps, s)
        ok = overlap_positive(om, h.volume(s & r))
        return TraceEntry(c / om if ok else math.inf, c, om, len(s))

    current = entry(r)
    best = r
    trace = [current]
    solves: list[SolveStats] = []
    iterations = 0
    converged = False
    alpha = current.alpha
    if alpha == 0:
        converged = True
    while not converged and iterations < max_iter:
        iterations += 1
        if local:
            s, stats = solve_strongly_local(h, r, eps, alpha, seeds)
            solves.append(stats)
        else:
            _, s = solve_global(h, r, eps, alpha, seeds)
        if not s:
            converged = True
            break
        cand = entry(s)
        if cand.alpha < alpha - tol * alpha:
            best, alpha = s, cand.alpha
            trace.append(cand)
            if alpha == 0:
                converged = True
        else:
            converged = True

    return ClusterReport(
        best_set=frozenset(best),
        objective=trace[-1].alpha,
        trace=trace,
        iterations=iterations,
        converged=converged,
        anchored=bool(seeds),
        eps=eps,
        reference=r,
        solves=solves,
    )
