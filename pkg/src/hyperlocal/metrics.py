from __future__ import annotations

from collections.abc import Iterable

__all__ = ["f1_metrics"]


def f1_metrics(found: Iterable[int], truth: Iterable[int]) -> tuple[float, float, float]:
    """Precision, recall and F1 of ``found`` against ``truth``.

    Empty inputs give zero precision or recall rather than raising.
    """
    found, truth = set(found), set(truth)
    hit = len(found & truth)
    precision = hit / len(found) if found else 0.0
    recall = hit / len(truth) if truth else 0.0
    if precision + recall == 0:
        return precision, recall, 0.0
    return precision, recall, 2 * precision * recall / (precision + recall)
