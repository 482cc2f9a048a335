import itertools
import math
import random

import numpy as np
import pytest

from hyperlocal.hypergraph import Hypergraph
from hyperlocal.oracle import (
    MAX_NODES,
    OracleCapError,
    brute_min_conductance,
    brute_min_hlc,
    brute_min_st_cut,
)


def direct_graph(n, pairs):
    """Graph cut, volume and conductance straight from the edge list."""
    deg = [sum(v in p for p in pairs) for v in range(n)]
    total = sum(deg)

    def cut(s):
        return sum((a in s) != (b in s) for a, b in pairs)

    def vol(s):
        return sum(deg[v] for v in s)

    return cut, vol, total


def subsets(n):
    for k in range(n + 1):
        yield from (set(c) for c in itertools.combinations(range(n), k))


def test_single_edge_hlc_by_enumeration():
    h = Hypergraph(3, [[0, 1, 2]])
    value, witness = brute_min_hlc(h, {0, 1}, 1.0)
    # S={0,1,2} has cut 0 and omega 2 - 1 = 1
    assert value == 0 and witness == {0, 1, 2}


def test_zero_cut_reference():
    h = Hypergraph(4, [[0, 1], [2, 3]])
    value, witness = brute_min_hlc(h, {0, 1}, 1.0)
    assert value == 0 and witness == {0, 1}


def test_no_positive_overlap_is_an_error():
    h = Hypergraph(3, [[0, 1]])
    with pytest.raises(ValueError):
        brute_min_hlc(h, {2}, 1.0)


def test_st_cut_large_alpha_keeps_reference():
    h = Hypergraph(5, [[0, 1, 2], [2, 3], [3, 4]])
    _, side = brute_min_st_cut(h, {0, 1}, 1.0, 1e6)
    assert {0, 1} <= side


def test_st_cut_small_alpha_is_empty():
    h = Hypergraph(5, [[0, 1, 2], [2, 3], [3, 4]])
    value, side = brute_min_st_cut(h, {0, 1}, 1.0, 1e-6)
    assert side == frozenset()
    assert value == pytest.approx(1e-6 * h.volume({0, 1}))


def test_conductance_examples():
    h = Hypergraph(4, [[0, 1], [2, 3]])
    assert brute_min_conductance(h)[0] == 0
    tri = Hypergraph(3, [[0, 1], [1, 2], [0, 2]])
    # every single node: cut 2, volume 2
    assert brute_min_conductance(tri)[0] == 1


def test_planted_six_nodes():
    h = Hypergraph(6, [[0, 1, 2], [0, 1], [1, 2], [3, 4, 5], [3, 4], [4, 5], [2, 3]])
    value, witness = brute_min_conductance(h)
    assert witness in ({0, 1, 2}, {3, 4, 5})
    assert value == pytest.approx(1 / h.volume({0, 1, 2}))


def test_validated_against_direct_graph_formulas():
    rng = random.Random(0)
    for _ in range(40):
        n = rng.randint(3, 9)
        pairs = [tuple(rng.sample(range(n), 2)) for _ in range(rng.randint(2, 14))]
        h = Hypergraph(n, pairs)
        cut, vol, total = direct_graph(n, pairs)
        live = [v for v in range(n) if vol({v}) > 0]
        r = set(rng.sample(live, max(1, len(live) // 3)))
        eps = rng.choice([1.0, 0.5, 2.0])
        alpha = rng.uniform(0.1, 2)

        cond = min(
            (cut(s) / min(vol(s), total - vol(s)) for s in subsets(n) if min(vol(s), total - vol(s)) > 0),
            default=math.inf,
        )
        if math.isfinite(cond):
            assert brute_min_conductance(h)[0] == pytest.approx(cond)

        st = min(cut(s) + alpha * vol(r - s) + alpha * eps * vol(s - r) for s in subsets(n))
        assert brute_min_st_cut(h, r, eps, alpha)[0] == pytest.approx(st)

        best = math.inf
        for s in subsets(n):
            om = vol(s & r) - eps * vol(s - r)
            if om > 1e-9 * vol(s & r):
                best = min(best, cut(s) / om)
        assert brute_min_hlc(h, r, eps)[0] == pytest.approx(best)


def test_ties_go_to_smallest_mask():
    h = Hypergraph(4, [[0, 1], [2, 3]])
    _, witness = brute_min_conductance(h)
    assert witness == {0, 1}


def test_cap():
    h = Hypergraph(MAX_NODES + 1, [[0, 1]])
    for call in (lambda: brute_min_conductance(h), lambda: brute_min_hlc(h, {0}, 1.0)):
        with pytest.raises(OracleCapError):
            call()


def test_cap_is_exactly_twenty():
    assert MAX_NODES == 20
    assert np.iinfo(np.int64).max > 1 << MAX_NODES
