"""Acceptance criteria, one test each.

Every test prints a single ``criterion N: PASS|FAIL`` line (also collected
in the pytest terminal summary) and then asserts the same condition.
"""

import itertools
import math
import random
import time
import warnings

import numpy as np
import pytest

from _family import family
from hyperlocal.baselines import flowseed_equivalent
from hyperlocal.hlc import minimize_hlc
from hyperlocal.hypergraph import Hypergraph
from hyperlocal.local_solver import locality_bounds, solve_global, solve_strongly_local
from hyperlocal.maxflow import FlowNetwork
from hyperlocal.oracle import brute_min_hlc, brute_min_st_cut
from hyperlocal.protocol import delta_sweep, grow_seed_protocol, run_protocol
from hyperlocal.reduction import gadget_expand
from hyperlocal.splitting import delta_linear
from hyperlocal.synth import synth_delta_mode, synth_planted, synth_scaling
from hyperlocal.theorems import TheoremCheckInput, check_theorems, worked_example_instance

TOL = 1e-9


def close(a, b, tol=TOL):
    return abs(a - b) <= tol * max(1.0, abs(b))


@pytest.fixture(scope="module")
def runs():
    """Criterion-1 family: 300 instances with their unanchored reports."""
    out = []
    for h, r, eps, d in family(seed=2024, count=300):
        out.append((h, r, eps, d, minimize_hlc(h, r, eps)))
    return out


def _violations(h, r, eps, stats):
    b = locality_bounds(h, r, eps)
    bad = []
    if stats.max_edges > b["edges"]:
        bad.append(("edges", stats.max_edges, b["edges"]))
    if stats.max_nodes > b["nodes"]:
        bad.append(("nodes", stats.max_nodes, b["nodes"]))
    if stats.explored_volume > b["explored_volume"] * (1 + TOL):
        bad.append(("explored", stats.explored_volume, b["explored_volume"]))
    return bad


# ----------------------------------------------------------------- 1


def test_criterion_1_oracle_hlc(criterion):
    start = time.perf_counter()
    mismatches = 0
    for h, r, eps, _ in family(seed=2024, count=300):
        rep = minimize_hlc(h, r, eps)
        best, _ = brute_min_hlc(h, r, eps)
        mismatches += not close(rep.objective, best)
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and elapsed < 60
    criterion(1, ok, f"300 instances, {mismatches} HLC mismatches vs oracle (tol 1e-9), {elapsed:.1f}s (< 60s)")
    assert ok


# ----------------------------------------------------------------- 2


def test_criterion_2_oracle_st_cut(criterion):
    rng = random.Random(7)
    mismatches = 0
    for h, r, eps, _ in family(seed=2024, count=300):
        alpha = rng.uniform(0.05, 2.0)
        _, stats = solve_strongly_local(h, r, eps, alpha)
        best, _ = brute_min_st_cut(h, r, eps, alpha)
        glob, _ = solve_global(h, r, eps, alpha)
        mismatches += not (close(stats.cut_value, best) and close(glob, best))
    criterion(2, mismatches == 0, f"300 instances, {mismatches} local/global/oracle s-t cut mismatches (tol 1e-9)")
    assert mismatches == 0


# ----------------------------------------------------------------- 3


def test_criterion_3_gadget_exactness(criterion):
    start = time.perf_counter()
    checked = wrong = 0
    for k in range(2, 9):
        members = list(range(2, 2 + k))
        for delta in range(1, k // 2 + 1):
            sf = delta_linear(k, delta)
            for mask in range(1 << k):
                net = FlowNetwork(2 + k, 0, 1)
                gadget_expand(net, members, sf)
                for i, v in enumerate(members):
                    if mask >> i & 1:
                        net.add_arc(0, v, math.inf)
                    else:
                        net.add_arc(v, 1, math.inf)
                a = bin(mask).count("1")
                expected = 0 if a in (0, k) else min(a, k - a, delta)
                wrong += net.max_flow() != expected
                checked += 1
    elapsed = time.perf_counter() - start
    ok = wrong == 0 and elapsed < 5
    criterion(3, ok, f"{checked} (k, delta, bipartition) cases, {wrong} wrong, {elapsed:.2f}s (< 5s)")
    assert ok


# ----------------------------------------------------------------- 4


def test_criterion_4_iteration_bound(criterion, runs):
    cut_violations = bound_violations = 0
    within_five = 0
    for h, r, _, _, rep in runs:
        cuts = [t.cut for t in rep.trace]
        cut_violations += any(b >= a for a, b in zip(cuts, cuts[1:]))
        bound_violations += rep.iterations > h.cut(r) + 1
        within_five += rep.iterations <= 5
    frac = within_five / len(runs)
    ok = cut_violations == 0 and bound_violations == 0 and frac >= 0.9
    criterion(
        4,
        ok,
        f"{cut_violations} non-decreasing cuts, {bound_violations} runs over cut(R)+1 iterations, "
        f"{frac:.1%} of runs in <= 5 iterations (>= 90%)",
    )
    assert ok


# ----------------------------------------------------------------- 5


def test_criterion_5_locality(criterion, runs):
    solves = violations = 0
    for h, r, eps, _, rep in runs:
        for stats in rep.solves:
            solves += 1
            violations += bool(_violations(h, r, eps, stats))
    rng = random.Random(11)
    for h, r, eps, _ in family(seed=2024, count=300):
        _, stats = solve_strongly_local(h, r, eps, rng.uniform(0.05, 2.0))
        solves += 1
        violations += bool(_violations(h, r, eps, stats))
    # planted instances, unanchored, delta-linear with unit singleton penalty
    for seed in range(3):
        ds = synth_planted(1500, 10, (30, 120), (3, 8), 0.2, 0.002, seed=seed, noise=0.1)
        for delta in (1, 3, 5000):
            h = ds.hypergraph.with_splitting(lambda k, w, d=delta: delta_linear(k, d, w))
            for i, t in enumerate(list(ds.labels.values())[:4]):
                _, ref = grow_seed_protocol(h, t, 0.05, 2 * len(t), [seed, i])
                ref = frozenset(v for v in ref if h.degrees[v] > 0)
                rep = minimize_hlc(h, ref, 1.0)
                for stats in rep.solves:
                    solves += 1
                    violations += bool(_violations(h, ref, 1.0, stats))
    criterion(5, violations == 0, f"{solves} strongly-local solves, {violations} locality-bound violations")
    assert violations == 0


# ----------------------------------------------------------------- 6


def _best_time(fn, repeats=3):
    best = math.inf
    for _ in range(repeats):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def test_criterion_6_strong_locality_scaling(criterion):
    start = time.perf_counter()
    local_times, global_times = {}, {}
    for n in (10**4, 10**5, 10**6):
        ds = synth_scaling(n)
        h, ref = ds.hypergraph, ds.labels["reference"]
        local_times[n] = _best_time(lambda: minimize_hlc(h, ref, 1.0))
        alpha = h.hlc(ref, 1.0, ref)
        global_times[n] = _best_time(lambda: solve_global(h, ref, 1.0, alpha), repeats=1 if n == 10**6 else 2)
        del ds, h
    spread = max(local_times.values()) / min(local_times.values())
    ns = sorted(global_times)
    slope = float(np.polyfit(np.log(ns), np.log([global_times[n] for n in ns]), 1)[0])
    elapsed = time.perf_counter() - start
    ok = spread < 3 and slope > 1 and elapsed < 300
    lt = ", ".join(f"{n:.0e}:{t * 1e3:.1f}ms" for n, t in local_times.items())
    gt = ", ".join(f"{n:.0e}:{t:.2f}s" for n, t in global_times.items())
    criterion(
        6,
        ok,
        f"local [{lt}] spread {spread:.2f}x (< 3x); global [{gt}] log-log slope {slope:.2f} (> 1); {elapsed:.0f}s (< 300s)",
    )
    assert ok


# ----------------------------------------------------------------- 7


def test_criterion_7_cut_improvement_bounds(criterion, runs):
    rng = random.Random(5)
    applicable = failures = 0
    for h, r, eps, _, rep in runs:
        targets = []
        if len(r) <= 10:
            for k in range(1, len(r) + 1):
                targets += [frozenset(c) for c in itertools.combinations(sorted(r), k)]
        for _ in range(10):
            t = frozenset(v for v in range(h.n) if rng.random() < 0.4)
            if t:
                targets.append(t)
        for t in targets:
            ledger = check_theorems(h, rep.best_set, t, TheoremCheckInput.measure(h, t, r, eps))
            applicable += sum(c.status != "skipped" for c in ledger.checks)
            failures += len(ledger.failures)

    h, t, r = worked_example_instance()
    eps = h.min_locality(r)
    inp = TheoremCheckInput.measure(h, t, r, eps)
    best = minimize_hlc(h, r, eps).best_set
    ledger = check_theorems(h, best, t, inp)
    worked = (
        math.isclose(inp.gamma, 1 / 3)
        and math.isclose(inp.beta, 1 / 2)
        and ledger.by_name("cond_overlap").status == "pass"
        and ledger.by_name("ncut_overlap").status == "pass"
        and h.conductance(best) <= 3 * h.conductance(t) * (1 + TOL)
        and h.ncut(best) <= 2 * h.ncut(t) * (1 + TOL)
    )
    ok = failures == 0 and worked
    criterion(
        7,
        ok,
        f"{applicable} applicable checks, {failures} violations; worked example gamma={inp.gamma:.4f} "
        f"beta={inp.beta:.4f} cond {h.conductance(best):.4f} <= 3*{h.conductance(t):.4f}, "
        f"ncut {h.ncut(best):.4f} <= 2*{h.ncut(t):.4f}",
    )
    assert ok


# ----------------------------------------------------------------- 8


def test_criterion_8_protocol_ordering(criterion):
    scores = {"hyperlocal": [], "bestneighbors": [], "topneighbors": []}
    n_clusters = 0
    for seed in range(3):
        ds = synth_planted(3000, 20, (30, 200), (3, 8), 0.15, 0.0015, seed=seed, noise=0.1)
        h = ds.hypergraph.with_splitting(lambda k, w: delta_linear(k, 5000.0, w))
        for i, t in enumerate(ds.labels.values()):
            out = run_protocol(h, t, frac=0.05, grow=2.0, eps=1.0, rng=[seed, i])
            n_clusters += 1
            for name in scores:
                scores[name].append(out["scores"][name][2])
    mean = {k: float(np.mean(v)) for k, v in scores.items()}
    ok = mean["hyperlocal"] >= mean["bestneighbors"] and mean["hyperlocal"] >= mean["topneighbors"]
    criterion(
        8,
        ok,
        f"{n_clusters} planted clusters (sizes 30-200): mean F1 HyperLocal {mean['hyperlocal']:.3f}, "
        f"BestNeighbors {mean['bestneighbors']:.3f}, TopNeighbors {mean['topneighbors']:.3f}",
    )
    assert ok


# ----------------------------------------------------------------- 9


def _sweep(mode, deltas):
    f1 = {d: [] for d in deltas}
    for seed in range(3):
        ds = synth_delta_mode(mode, seed=seed)
        for row in delta_sweep(ds.hypergraph, list(ds.labels.values()), deltas, rng_seed=seed):
            f1[row["delta"]].append(row["f1"])
    return {d: float(np.mean(v)) for d, v in f1.items()}


def test_criterion_9_delta_sweep(criterion):
    deltas = [1, 2, 5, 10, 100, 5000]
    noisy = _sweep("noisy", deltas)
    clean = _sweep("clean", deltas)
    noisy_ok = noisy[5000] > noisy[1]
    clean_ok = all(clean[1] >= v for v in clean.values())
    fmt = lambda m: " ".join(f"{d}:{v:.3f}" for d, v in m.items())  # noqa: E731
    criterion(9, noisy_ok and clean_ok, f"noisy [{fmt(noisy)}] large > 1: {noisy_ok}; clean [{fmt(clean)}] delta=1 best: {clean_ok}")
    assert noisy_ok and clean_ok


# ----------------------------------------------------------------- 10


def _graph_local_conductance(n, pairs, r, eps):
    """Enumerate cut / (vol(S & R) - eps vol(S - R)) straight from the edge list."""
    deg = [0] * n
    for a, b in pairs:
        deg[a] += 1
        deg[b] += 1
    best = math.inf
    for mask in range(1, 1 << n):
        s = {v for v in range(n) if mask >> v & 1}
        inside = sum(deg[v] for v in s & r)
        om = inside - eps * sum(deg[v] for v in s - r)
        if om > 1e-9 * inside:
            best = min(best, sum((a in s) != (b in s) for a, b in pairs) / om)
    return best


def test_criterion_10_graph_consistency(criterion):
    rng = random.Random(10)
    done = mismatches = 0
    while done < 100:
        n = rng.randint(3, 10)
        pairs = [tuple(rng.sample(range(n), 2)) for _ in range(rng.randint(2, 18))]
        g = Hypergraph(n, pairs)
        live = [v for v in range(n) if g.degrees[v] > 0]
        r = set(rng.sample(live, max(1, len(live) // 3)))
        if g.volume(r) > g.total_volume - g.volume(r):
            continue
        eps = rng.choice([g.min_locality(r), 1.0, 2.0])
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            rep = flowseed_equivalent(g, r, eps)
        expected = _graph_local_conductance(n, pairs, r, eps)
        mismatches += not close(rep.objective, expected, 1e-12)
        done += 1
    criterion(10, mismatches == 0, f"{done} random graphs, {mismatches} mismatches vs enumerated local conductance")
    assert mismatches == 0
