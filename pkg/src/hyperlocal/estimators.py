"""scikit-learn style wrappers.

The "data" ``X`` is a :class:`Hypergraph`; the reference set and seeds are
fit-time arguments.  Fitted estimators expose a 0/1 membership vector in
``labels_`` like the sklearn clusterers.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .baselines import best_neighbors, clique_expand, top_neighbors
from .hlc import minimize_hlc
from .splitting import delta_linear
from .validation import check_hypergraph, check_membership_vector, check_node_set, check_positive

__all__ = ["BestNeighbors", "CliqueExpansion", "FlowSeed", "HyperLocal", "TopNeighbors"]


def _membership(n, nodes):
    y = np.zeros(n, dtype=int)
    y[sorted(nodes)] = 1
    return y


class _SetClusterer(ClusterMixin, BaseEstimator):
    def predict(self, X):
        check_is_fitted(self, "cluster_")
        h = check_hypergraph(X)
        if h.n != self.labels_.shape[0]:
            raise ValueError("predict expects the hypergraph the estimator was fitted on")
        return self.labels_.copy()

    def fit_predict(self, X, y=None, **kwargs):
        return self.fit(X, y, **kwargs).labels_


class HyperLocal(_SetClusterer):
    """Localized conductance minimization around a reference set.

    Parameters
    ----------
    epsilon : float
        Penalty on volume outside the reference set.
    delta : float or None
        Threshold of the delta-linear splitting function applied to every
        edge.  ``None`` keeps the hypergraph's own splitting functions.
    tol : float
        Relative improvement needed to accept a new set.
    local : bool
        Solve each cut on a growing local sub-hypergraph (default) or on
        the whole hypergraph.
    """

    def __init__(self, epsilon=1.0, delta=None, tol=1e-8, local=True):
        self.epsilon = epsilon
        self.delta = delta
        self.tol = tol
        self.local = local

    def fit(self, X, y=None, reference=None, seeds=None):
        """``reference`` defaults to the members of a 0/1 vector ``y``."""
        h = check_hypergraph(X)
        eps = check_positive(self.epsilon, "epsilon")
        if reference is None:
            if y is None:
                raise ValueError("pass a reference set or a 0/1 vector y")
            reference = np.flatnonzero(check_membership_vector(h, y))
        r = check_node_set(h, reference, "reference", allow_empty=False)
        s = check_node_set(h, seeds, "seeds")
        if self.delta is not None:
            d = check_positive(self.delta, "delta")
            h = h.with_splitting(lambda k, w: delta_linear(k, d, w))
        self.report_ = minimize_hlc(h, r, eps, s, tol=self.tol, local=self.local)
        self.cluster_ = self.report_.best_set
        self.objective_ = self.report_.objective
        self.n_iter_ = self.report_.iterations
        self.labels_ = _membership(h.n, self.cluster_)
        return self


class FlowSeed(HyperLocal):
    """The graph special case: requires a 2-uniform hypergraph."""

    def __init__(self, epsilon=1.0, tol=1e-8, local=True):
        super().__init__(epsilon=epsilon, delta=None, tol=tol, local=local)

    def fit(self, X, y=None, reference=None, seeds=None):
        h = check_hypergraph(X)
        if not h.is_uniform(2):
            raise ValueError("FlowSeed expects a 2-uniform hypergraph")
        return super().fit(h, y, reference=reference, seeds=seeds)


class _Ranking(_SetClusterer):
    _rank = None

    def __init__(self, n_neighbors=10, include_seeds=True):
        self.n_neighbors = n_neighbors
        self.include_seeds = include_seeds

    def fit(self, X, y=None, seeds=None):
        h = check_hypergraph(X)
        if seeds is None and y is not None:
            seeds = np.flatnonzero(check_membership_vector(h, y))
        s = check_node_set(h, seeds, "seeds", allow_empty=False)
        if int(self.n_neighbors) < 0:
            raise ValueError("n_neighbors must be nonnegative")
        self.ranking_ = type(self)._rank(h, s, int(self.n_neighbors))
        self.cluster_ = frozenset(self.ranking_) | (s if self.include_seeds else frozenset())
        self.labels_ = _membership(h.n, self.cluster_)
        return self


class TopNeighbors(_Ranking):
    """Neighbors ranked by how many of their edges touch a seed."""

    _rank = staticmethod(top_neighbors)


class BestNeighbors(_Ranking):
    """Neighbors ranked by the fraction of their edges that touch a seed."""

    _rank = staticmethod(best_neighbors)


class CliqueExpansion(TransformerMixin, BaseEstimator):
    """Replace every hyperedge by a clique, dropping edges of ``max_size`` or more nodes."""

    def __init__(self, weighted=False, max_size=50):
        self.weighted = weighted
        self.max_size = max_size

    def fit(self, X, y=None):
        check_hypergraph(X)
        if int(self.max_size) < 2:
            raise ValueError("max_size must be at least 2")
        self.n_discarded_ = sum(len(e) >= self.max_size for e in X.edges)
        return self

    def transform(self, X):
        check_is_fitted(self, "n_discarded_")
        g, self.n_discarded_ = clique_expand(check_hypergraph(X), bool(self.weighted), int(self.max_size))
        return g
