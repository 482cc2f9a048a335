import math

import pytest

from _family import family
from hyperlocal.hlc import minimize_hlc
from hyperlocal.hypergraph import Hypergraph
from hyperlocal.oracle import brute_min_hlc


def two_blocks():
    # two triangles joined by one edge
    return Hypergraph(6, [[0, 1], [1, 2], [0, 2], [3, 4], [4, 5], [3, 5], [2, 3]])


def test_reference_already_optimal_takes_one_iteration():
    h = two_blocks()
    r = {0, 1, 2}
    rep = minimize_hlc(h, r, 1.0)
    assert rep.iterations == 1
    assert rep.best_set == r
    assert rep.objective == h.hlc(r, 1.0, r)


def test_matches_oracle_on_random_instances():
    for h, r, eps, _ in family(seed=31, count=300):
        rep = minimize_hlc(h, r, eps)
        best, _ = brute_min_hlc(h, r, eps)
        assert rep.objective == pytest.approx(best, rel=1e-9, abs=1e-9)


def test_global_mode_agrees_with_local_mode():
    for h, r, eps, _ in family(seed=32, count=80):
        a = minimize_hlc(h, r, eps)
        b = minimize_hlc(h, r, eps, local=False)
        assert a.best_set == b.best_set
        assert a.objective == b.objective


def test_trace_strictly_decreases():
    for h, r, eps, d in family(seed=33, count=300):
        rep = minimize_hlc(h, r, eps)
        alphas = rep.alphas
        cuts = [t.cut for t in rep.trace]
        omegas = [t.omega for t in rep.trace]
        assert all(b < a for a, b in zip(alphas, alphas[1:]))
        assert all(b < a for a, b in zip(cuts, cuts[1:]))
        assert all(b < a for a, b in zip(omegas, omegas[1:]))
        assert rep.objective == pytest.approx(h.hlc(r, eps, rep.best_set))


def test_iteration_bound_for_integer_penalties():
    for h, r, eps, _ in family(seed=34, count=300):
        rep = minimize_hlc(h, r, eps)
        assert rep.iterations <= h.cut(r) + 1


def test_seed_anchoring_keeps_seeds_and_is_flagged():
    h = two_blocks()
    rep = minimize_hlc(h, {2, 3}, 1.0, seeds={2})
    assert 2 in rep.best_set
    assert rep.anchored
    assert rep.objective <= h.hlc({2, 3}, 1.0, {2, 3})


def test_zero_cut_reference_stops_immediately():
    h = Hypergraph(4, [[0, 1], [2, 3]])
    rep = minimize_hlc(h, {0, 1}, 1.0)
    assert rep.objective == 0 and rep.iterations == 0 and rep.converged


def test_errors():
    h = two_blocks()
    with pytest.raises(ValueError):
        minimize_hlc(h, set(), 1.0)
    g = Hypergraph(4, [[0, 1]])
    with pytest.raises(ValueError):
        minimize_hlc(g, {2, 3}, 1.0)
    with pytest.raises(ValueError):
        minimize_hlc(h, {0}, 1.0, seeds={5})
    with pytest.raises(ValueError):
        minimize_hlc(h, {0}, 0.0)


def test_warnings_for_heavy_reference_and_small_eps():
    h = two_blocks()
    with pytest.warns(UserWarning):
        minimize_hlc(h, {0, 1, 2, 3}, 2.0)
    with pytest.warns(UserWarning, match="below"):
        minimize_hlc(h, {0, 1}, 0.01)


def test_report_dict_is_plain():
    rep = minimize_hlc(two_blocks(), {0, 1}, 1.0)
    d = rep.to_dict()
    assert d["best_set"] == sorted(rep.best_set)
    assert len(d["trace"]) == len(rep.trace)
    assert all(math.isfinite(t["alpha"]) for t in d["trace"])
