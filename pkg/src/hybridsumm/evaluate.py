"""N-gram overlap metrics: ROUGE-N recall, precision and F1."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

_WORD = re.compile(r"[^\W_]+")


@dataclass(frozen=True)
class RougeScore:
    n: int
    recall: float
    precision: float
    f1: float


def f1(precision: float, recall: float) -> float:
    denom = precision + recall
    if denom == 0:
        return 0.0
    return 2 * precision * recall / denom


def normalize_tokens(text: str, stem: bool = False) -> list[str]:
    """Lowercased alphanumeric runs; punctuation dropped, stopwords kept."""
    tokens = _WORD.findall(text.lower())
    if stem:
        from .preprocess import stem as porter

        tokens = [porter(t) if t.isalpha() else t for t in tokens]
    return tokens


def ngrams(text: str, n: int, stem: bool = False) -> Counter:
    if n < 1:
        raise ValueError("n must be positive")
    toks = normalize_tokens(text, stem)
    return Counter(tuple(toks[i:i + n]) for i in range(len(toks) - n + 1))


def rouge_n(candidate: str, references: Sequence[str] | str, n: int = 2, stem: bool = False) -> RougeScore:
    """ROUGE-N of ``candidate`` against one or more references.

    Matches are clipped per reference and micro-averaged: recall divides the
    summed matches by the summed reference n-gram counts, precision by the
    candidate n-gram count times the number of references.
    """
    if isinstance(references, str):
        references = [references]
    if not references:
        raise ValueError("at least one reference is required")
    cand = ngrams(candidate, n, stem)
    cand_total = sum(cand.values())
    if cand_total == 0:
        return RougeScore(n, 0.0, 0.0, 0.0)
    matches = 0
    ref_total = 0
    for ref in references:
        grams = ngrams(ref, n, stem)
        ref_total += sum(grams.values())
        matches += sum(min(c, grams[g]) for g, c in cand.items())
    recall = matches / ref_total if ref_total else 0.0
    precision = matches / (cand_total * len(references))
    return RougeScore(n, recall, precision, f1(precision, recall))


def sentence_f1(candidate: Sequence[str], gold: Sequence[str]) -> float:
    """F1 over exact (normalized) sentence matches."""
    norm = lambda s: " ".join(normalize_tokens(s))  # noqa: E731
    c = {norm(s) for s in candidate if s.strip()}
    g = {norm(s) for s in gold if s.strip()}
    if not c or not g:
        return 0.0
    hit = len(c & g)
    return f1(hit / len(c), hit / len(g))
