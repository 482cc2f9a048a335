"""Input checks shared by the estimators and the command line."""

from __future__ import annotations

import math
from collections.abc import Iterable

import numpy as np

from .hypergraph import Hypergraph, InvalidNodeError

__all__ = ["check_hypergraph", "check_membership_vector", "check_node_set", "check_positive"]


def check_hypergraph(h) -> Hypergraph:
    if not isinstance(h, Hypergraph):
        raise TypeError(f"expected a Hypergraph, got {type(h).__name__}")
    return h


def check_node_set(h: Hypergraph, nodes: Iterable[int] | None, name: str = "nodes", allow_empty: bool = True) -> frozenset[int]:
    """Coerce ``nodes`` to a frozenset of valid node ids."""
    if nodes is None:
        nodes = ()
    if isinstance(nodes, np.ndarray) and nodes.dtype == bool:
        nodes = np.flatnonzero(nodes)
    out = set()
    for v in nodes:
        if isinstance(v, (bool, np.bool_)) or not float(v).is_integer():
            raise TypeError(f"{name} must hold integer node ids, got {v!r}")
        v = int(v)
        if not 0 <= v < h.n:
            raise InvalidNodeError(f"{name}: node {v} outside [0, {h.n})")
        out.add(v)
    if not out and not allow_empty:
        raise ValueError(f"{name} is empty")
    return frozenset(out)


def check_membership_vector(h: Hypergraph, y) -> np.ndarray:
    """A length-``n`` 0/1 vector, returned as bool."""
    y = np.asarray(y)
    if y.shape != (h.n,):
        raise ValueError(f"membership vector must have shape ({h.n},), got {y.shape}")
    if not np.isin(y, (0, 1)).all():
        raise ValueError("membership vector must be 0/1")
    return y.astype(bool)


def check_positive(value, name: str) -> float:
    value = float(value)
    if not (math.isfinite(value) and value > 0):
        raise ValueError(f"{name} must be a positive finite number, got {value}")
    return value
