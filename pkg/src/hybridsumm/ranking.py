"""Sentence ranking from similarity matrices and budgeted summary selection."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .preprocess import Document
from .statmodels import RankVector, SimilarityMatrix

BUDGET_KINDS = ("sentences", "words", "chars")
DEFAULT_CHARS = 665


@dataclass(frozen=True)
class RankedList:
    model: str
    order: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.order)) != len(self.order):
            raise ValueError("ranked list contains duplicates")


@dataclass(frozen=True)
class Budget:
    kind: str = "chars"
    limit: int = DEFAULT_CHARS

    def __post_init__(self):
        if self.kind not in BUDGET_KINDS:
            raise ValueError(f"unknown budget kind {self.kind!r}")
        if self.limit <= 0:
            raise ValueError("budget must be positive")

    @classmethod
    def sentences(cls, k: int) -> Budget:
        return cls("sentences", k)

    @classmethod
    def words(cls, n: int) -> Budget:
        return cls("words", n)

    @classmethod
    def chars(cls, n: int = DEFAULT_CHARS) -> Budget:
        return cls("chars", n)

    def measure(self, sentences: Sequence[str]) -> int:
        if self.kind == "sentences":
            return len(sentences)
        if self.kind == "words":
            return sum(len(s.split()) for s in sentences)
        if not sentences:
            return 0
        return sum(len(s) for s in sentences) + len(sentences) - 1


@dataclass(frozen=True)
class Summary:
    doc_id: str
    indices: tuple[int, ...]
    sentences: tuple[str, ...]
    budget: Budget
    warning: str | None = None

    @property
    def text(self) -> str:
        """Selected sentences in document order, separated by single spaces."""
        return " ".join(self.sentences)

    def to_lines(self) -> str:
        return "".join(s + "\n" for s in self.sentences)


def relevance_scores(sim: SimilarityMatrix) -> RankVector:
    """Row sums of the similarity matrix, diagonal included."""
    values = np.asarray(sim.values, dtype=np.float64)
    return RankVector(sim.model, values.sum(axis=1))


def hierarchical_cluster_rank(sim) -> RankedList:
    """Rank sentences by repeatedly merging the most similar pair.

    The diagonal is ignored. Each step picks the largest nonzero off-diagonal
    entry ``s[i, j]`` (ties: smallest ``(i, j)``), records ``i`` then ``j``,
    averages row and column ``j`` into ``i`` and clears row and column ``j``.
    Sentences never picked follow in ascending order.
    """
    model = getattr(sim, "model", "similarity")
    s = np.array(getattr(sim, "values", sim), dtype=np.float64)
    n = s.shape[0]
    np.fill_diagonal(s, 0.0)
    order: list[int] = []
    seen = set()
    while True:
        if not s.any():
            break
        best = s.max()
        if best <= 0:
            break
        flat = int(np.flatnonzero(s == best)[0])
        i, j = divmod(flat, n)
        col = (s[:, i] + s[:, j]) / 2.0
        row = (s[i, :] + s[j, :]) / 2.0
        s[:, i] = col
        s[i, :] = row
        s[j, :] = 0.0
        s[:, j] = 0.0
        s[i, i] = 0.0
        for k in (i, j):
            if k not in seen:
                seen.add(k)
                order.append(k)
    order.extend(k for k in range(n) if k not in seen)
    return RankedList(model, tuple(order))


def rank_order(ranks) -> list[int]:
    if isinstance(ranks, RankVector):
        return ranks.order()
    if isinstance(ranks, RankedList):
        return list(ranks.order)
    return [int(i) for i in ranks]


def select_summary(ranks, doc: Document, budget: Budget) -> Summary:
    """Take sentences in rank order until the next one would break the budget.

    The selection is emitted in document order.
    """
    chosen: list[int] = []
    for idx in rank_order(ranks):
        if budget.kind == "sentences":
            if len(chosen) >= budget.limit:
                break
        else:
            trial = [doc.sentences[k].raw for k in chosen + [idx]]
            if budget.measure(trial) > budget.limit:
                break
        chosen.append(idx)
    warning = None
    if not chosen and len(doc.sentences):
        warning = "budget is smaller than the top-ranked sentence"
    chosen.sort()
    return Summary(
        doc.id,
        tuple(chosen),
        tuple(doc.sentences[k].raw for k in chosen),
        budget,
        warning,
    )
