"""Seed-growing evaluation protocol and the splitting-function sweep."""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence

import numpy as np

from .baselines import best_neighbors, top_neighbors
from .hlc import minimize_hlc
from .hypergraph import Hypergraph
from .metrics import f1_metrics
from .splitting import delta_linear

__all__ = ["delta_sweep", "grow_seed_protocol", "run_protocol"]


def grow_seed_protocol(
    h: Hypergraph, target: Iterable[int], frac: float, extra: int, rng
) -> tuple[frozenset[int], frozenset[int]]:
    """Sample ``ceil(frac * |T|)`` seeds from ``T`` and grow them by ``extra`` best neighbors."""
    if not 0 < frac <= 1:
        raise ValueError("frac must lie in (0, 1]")
    target = sorted(target)
    if not target:
        raise ValueError("target cluster is empty")
    rng = np.random.default_rng(rng)
    n_seeds = math.ceil(frac * len(target))
    seeds = frozenset(int(v) for v in rng.choice(target, size=n_seeds, replace=False))
    reference = seeds | frozenset(best_neighbors(h, seeds, extra))
    return seeds, reference


def run_protocol(
    h: Hypergraph,
    target: Iterable[int],
    frac: float = 0.05,
    grow: float = 2.0,
    eps: float = 1.0,
    rng=0,
    anchor: bool = True,
) -> dict:
    """One trial: seeds, reference set, HyperLocal and both neighbor baselines.

    Baselines return the seeds plus their top ``|T| - |seeds|`` ranked
    nodes, so every baseline output has exactly ``|T|`` nodes.
    """
    target = frozenset(target)
    seeds, reference = grow_seed_protocol(h, target, frac, int(round(grow * len(target))), rng)
    report = minimize_hlc(h, reference, eps, seeds if anchor else ())
    k = max(len(target) - len(seeds), 0)
    found = {
        "hyperlocal": report.best_set,
        "bestneighbors": seeds | frozenset(best_neighbors(h, seeds, k)),
        "topneighbors": seeds | frozenset(top_neighbors(h, seeds, k)),
        "reference": reference,
    }
    scores = {name: f1_metrics(s, target) for name, s in found.items()}
    return {
        "size": len(target),
        "seeds": len(seeds),
        "reference": len(reference),
        "iterations": report.iterations,
        "scores": scores,
        "report": report,
    }


def delta_sweep(
    h: Hypergraph,
    targets: Sequence[Iterable[int]],
    deltas: Sequence[float],
    frac: float = 0.05,
    grow: float = 2.0,
    eps: float = 1.0,
    rng_seed: int = 0,
) -> list[dict]:
    """F1 of HyperLocal for each delta and target; rows sorted by delta.

    The same seeds and reference sets are reused for every delta.
    """
    setups = []
    for i, t in enumerate(targets):
        t = frozenset(t)
        seeds, ref = grow_seed_protocol(h, t, frac, int(round(grow * len(t))), [rng_seed, i])
        setups.append((t, seeds, ref))
    rows = []
    for delta in sorted(deltas):
        g = h.with_splitting(lambda k, w, d=delta: delta_linear(k, d, w))
        for i, (t, seeds, ref) in enumerate(setups):
            report = minimize_hlc(g, ref, eps, seeds)
            p, r, f1 = f1_metrics(report.best_set, t)
            rows.append({"delta": delta, "target": i, "precision": p, "recall": r, "f1": f1})
    return rows
