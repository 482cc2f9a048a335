"""Reading and writing hypergraph datasets.

Hypergraph files hold one hyperedge per line as whitespace-separated node
tokens, optionally led by ``w=<float>``.  Blank lines and ``#`` comments
are skipped, except a ``#nodes: a b c`` header which fixes the dense id
order and declares nodes that have no edges.  Label files hold
``name: token token ...`` per line.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass, field
from pathlib import Path

from .hypergraph import Hypergraph
from .splitting import all_or_nothing

__all__ = ["DatasetParseError", "LabeledDataset", "load_hypergraph", "save_dataset"]

logger = logging.getLogger(__name__)

NODES = "#nodes:"


class DatasetParseError(ValueError):
    def __init__(self, path, lineno, message):
        super().__init__(f"{path}:{lineno}: {message}")
        self.path = path
        self.lineno = lineno


@dataclass
class LabeledDataset:
    hypergraph: Hypergraph
    labels: dict[str, frozenset[int]] = field(default_factory=dict)
    ids: list[str] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    @property
    def index(self) -> dict[str, int]:
        return {tok: i for i, tok in enumerate(self.ids)}

    def __eq__(self, other):
        if not isinstance(other, LabeledDataset):
            return NotImplemented
        h, g = self.hypergraph, other.hypergraph
        return (
            h.n == g.n
            and h.edges == g.edges
            and list(h.weights) == list(g.weights)
            and [sf.table for sf in h.splitting] == [sf.table for sf in g.splitting]
            and self.labels == other.labels
            and self.ids == other.ids
        )


def _parse_edges(path):
    ids: dict[str, int] = {}
    edges, weights = [], []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            text = line.strip()
            if not text:
                continue
            if text.startswith(NODES):
                for tok in text[len(NODES) :].split():
                    ids.setdefault(tok, len(ids))
                continue
            if text.startswith("#"):
                continue
            tokens = text.split()
            w = 1.0
            if tokens[0].startswith("w="):
                try:
                    w = float(tokens[0][2:])
                except ValueError:
                    raise DatasetParseError(path, lineno, f"bad weight {tokens[0]!r}") from None
                if not w > 0:
                    raise DatasetParseError(path, lineno, "edge weight must be positive")
                tokens = tokens[1:]
            members = list(dict.fromkeys(tokens))
            if len(members) < 2:
                edges.append(None)
                continue
            edges.append([ids.setdefault(tok, len(ids)) for tok in members])
            weights.append(w)
    return ids, edges, weights


def _parse_labels(path, ids):
    labels: dict[str, set[int]] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            name, sep, rest = text.partition(":")
            if not sep or not name.strip():
                raise DatasetParseError(path, lineno, "expected 'name: id id ...'")
            members = labels.setdefault(name.strip(), set())
            for tok in rest.split():
                members.add(ids.setdefault(tok, len(ids)))
    return {k: frozenset(v) for k, v in labels.items()}


def load_hypergraph(
    path, labels_path=None, splitting: Callable | None = None
) -> LabeledDataset:
    """Load a dataset; ``splitting`` is a factory ``(k, weight) -> CardinalitySplitting``."""
    ids, parsed, weights = _parse_edges(path)
    dropped = sum(e is None for e in parsed)
    if dropped:
        logger.warning("%s: dropped %d hyperedges with fewer than two distinct nodes", path, dropped)
    edges = [e for e in parsed if e is not None]
    labels = _parse_labels(labels_path, ids) if labels_path else {}
    h = Hypergraph(len(ids), edges, splitting=splitting or all_or_nothing, weights=weights)
    h.dropped_edges += dropped
    order = sorted(ids, key=ids.get)
    return LabeledDataset(h, labels, order, {"source": str(path), "dropped_edges": dropped})


def save_dataset(ds: LabeledDataset, path, labels_path=None) -> None:
    h = ds.hypergraph
    ids = ds.ids or [str(i) for i in range(h.n)]
    lines = []
    order: dict[int, None] = {}
    for e, w in zip(h.edges, h.weights):
        order.update(dict.fromkeys(e))
        prefix = [] if w == 1.0 else [f"w={float(w)!r}"]
        lines.append(" ".join(prefix + [ids[v] for v in e]))
    header = []
    if list(order) != list(range(h.n)):
        header = [NODES + " " + " ".join(ids)]
    Path(path).write_text("\n".join(header + lines) + "\n", encoding="utf-8")
    if labels_path is not None:
        out = [f"{name}: " + " ".join(ids[v] for v in sorted(members)) for name, members in ds.labels.items()]
        Path(labels_path).write_text("\n".join(out) + "\n", encoding="utf-8")
