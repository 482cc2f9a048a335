"""Empirical checks of the cut-improvement guarantees.

Given the set returned by an unanchored run and a target set ``T``, measure
the overlap parameters ``T`` satisfies and assert every conductance and
normalized-cut bound whose hypotheses hold.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass, field

from .hypergraph import Hypergraph

__all__ = [
    "TheoremCheck",
    "TheoremCheckInput",
    "TheoremLedger",
    "check_theorems",
    "worked_example_instance",
]

TOL = 1e-9


@dataclass(frozen=True)
class TheoremCheckInput:
    """Overlap measurements of a target ``T`` relative to the reference ``R``.

    ``gamma`` and ``beta`` are the largest values for which the two overlap
    assumptions hold; ``g_target`` is ``vol(~R) vol(T & R) - vol(R) vol(T - R)``.
    """

    target: frozenset[int]
    reference: frozenset[int]
    eps: float
    eps0: float
    mu: float
    gamma: float
    beta: float
    g_target: float

    @classmethod
    def measure(cls, h: Hypergraph, target: Iterable[int], reference: Iterable[int], eps: float):
        t, r = frozenset(target), frozenset(reference)
        vol_v = h.total_volume
        vol_r = h.volume(r)
        vol_t = h.volume(t)
        t_in_r = h.volume(t & r)
        rest_r = vol_v - vol_r
        rest_t = vol_v - vol_t
        eps0 = vol_r / rest_r if rest_r > 0 else math.inf
        frac_t = t_in_r / vol_t if vol_t > 0 else -math.inf
        gamma = (frac_t - vol_r / vol_v) / (rest_r / vol_v) if rest_r > 0 else -math.inf
        frac_rest = (vol_r - t_in_r) / rest_t if rest_t > 0 else math.inf
        beta = frac_t - frac_rest
        g = rest_r * t_in_r - vol_r * (vol_t - t_in_r)
        return cls(t, r, eps, eps0, eps - eps0, gamma, beta, g)


@dataclass(frozen=True)
class TheoremCheck:
    name: str
    status: str  # "pass", "fail" or "skipped"
    value: float = math.nan
    bound: float = math.nan
    reason: str = ""

    @property
    def slack(self) -> float:
        return self.bound - self.value


@dataclass
class TheoremLedger:
    checks: list[TheoremCheck] = field(default_factory=list)
    params: dict = field(default_factory=dict)

    @property
    def failures(self) -> list[TheoremCheck]:
        return [c for c in self.checks if c.status == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def by_name(self, name: str) -> TheoremCheck:
        return next(c for c in self.checks if c.name == name)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            if c.status == "skipped":
                out.append(f"{c.name:<16} skipped  ({c.reason})")
            else:
                out.append(f"{c.name:<16} {c.status:<7}  value={c.value:.6g} bound={c.bound:.6g} slack={c.slack:.3g}")
        return out


def _leq(name, value, bound):
    ok = value <= bound * (1 + TOL) + TOL
    return TheoremCheck(name, "pass" if ok else "fail", value, bound)


def check_theorems(
    h: Hypergraph, best: Iterable[int], target: Iterable[int], inp: TheoremCheckInput, anchored: bool = False
) -> TheoremLedger:
    """Check every applicable guarantee for the returned set ``best``.

    Inapplicable statements are recorded as skipped, never failed.  Runs
    with anchored seeds carry no guarantees, so everything is skipped.
    """
    best = frozenset(best)
    t = inp.target
    ledger = TheoremLedger(params={"eps0": inp.eps0, "mu": inp.mu, "gamma": inp.gamma, "beta": inp.beta, "g": inp.g_target})
    names = ["cond_le_hlc", "cond_subset", "cond_overlap", "ncut_overlap", "g_identity"]
    if anchored:
        ledger.checks = [TheoremCheck(n, "skipped", reason="seeds were anchored") for n in names]
        return ledger

    r, eps, mu = inp.reference, inp.eps, inp.mu
    vol_t = h.volume(t)
    rest_t = h.total_volume - vol_t
    eps_ok = inp.eps0 <= 1 and inp.eps0 * (1 - TOL) <= eps < inp.eps0 + 1
    vol_r = h.volume(r)
    balanced_r = vol_r <= h.total_volume - vol_r

    hlc_best = h.hlc(r, eps, best)
    cond_best = h.conductance(best)
    ncut_best = h.ncut(best)

    # conductance never exceeds the localized objective
    if eps_ok and balanced_r and math.isfinite(hlc_best):
        ledger.checks.append(_leq("cond_le_hlc", cond_best, hlc_best))
    else:
        ledger.checks.append(TheoremCheck("cond_le_hlc", "skipped", reason="eps out of range or vol(R) > vol(~R)"))

    cond_t = h.conductance(t)
    if not t or not t <= r:
        ledger.checks.append(TheoremCheck("cond_subset", "skipped", reason="T is not a nonempty subset of R"))
    elif not (eps_ok and balanced_r):
        ledger.checks.append(TheoremCheck("cond_subset", "skipped", reason="eps out of range or vol(R) > vol(~R)"))
    else:
        ledger.checks.append(_leq("cond_subset", cond_best, cond_t))

    gamma = min(inp.gamma, 1.0)
    if not (eps_ok and 0 < vol_t <= rest_t):
        ledger.checks.append(TheoremCheck("cond_overlap", "skipped", reason="eps out of range or vol(T) > vol(~T)"))
    elif not gamma > mu:
        ledger.checks.append(TheoremCheck("cond_overlap", "skipped", reason=f"gamma={inp.gamma:.4g} <= mu={mu:.4g}"))
    else:
        ledger.checks.append(_leq("cond_overlap", cond_best, cond_t / (gamma - mu)))

    beta = min(inp.beta, 1.0)
    if not (eps_ok and 0 < vol_t <= rest_t):
        ledger.checks.append(TheoremCheck("ncut_overlap", "skipped", reason="eps out of range or vol(T) > vol(~T)"))
    elif not beta > 2 * mu / (1 + 2 * mu):
        ledger.checks.append(TheoremCheck("ncut_overlap", "skipped", reason=f"beta={inp.beta:.4g} too small for mu={mu:.4g}"))
    else:
        ledger.checks.append(_leq("ncut_overlap", ncut_best, h.ncut(t) / (beta + 2 * mu * beta - 2 * mu)))

    # g(T) also equals vol(~T) vol(T & R) - vol(T) vol(~T & R)
    alt = rest_t * h.volume(t & r) - vol_t * (vol_r - h.volume(t & r))
    scale = max(1.0, abs(alt), abs(inp.g_target))
    ok = abs(alt - inp.g_target) <= 1e-9 * scale
    ledger.checks.append(TheoremCheck("g_identity", "pass" if ok else "fail", inp.g_target, alt))
    return ledger


def worked_example_instance() -> tuple[Hypergraph, frozenset[int], frozenset[int]]:
    """A 3-regular hypergraph with a half-volume target ``T`` and ``R`` half of ``T``.

    Two blocks of eight nodes, each covered by cyclic triples; one triple
    per block is rewired to straddle the blocks so every degree stays 3.
    """
    edges = []
    for base in (0, 8):
        for i in range(8):
            edges.append([base + i, base + (i + 1) % 8, base + (i + 2) % 8])
    edges.remove([6, 7, 0])
    edges.remove([14, 15, 8])
    edges += [[6, 7, 8], [14, 15, 0]]
    h = Hypergraph(16, edges)
    return h, frozenset(range(8)), frozenset(range(4))
