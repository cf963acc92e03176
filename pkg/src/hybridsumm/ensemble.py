"""Weighted consensus of per-model summaries, weight training and profile lookup."""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np

from .evaluate import rouge_n, sentence_f1
from .exceptions import DataError, FormatError, HybridSummError
from .lexicon import WordVectorTable
from .preprocess import Document
from .ranking import Budget, Summary, rank_order, select_summary
from .semmodels import glove_sentence_vector
from .statmodels import RankVector, cosine_similarity

PROVENANCES = ("uniform", "trained", "nearest")


@dataclass(frozen=True)
class ModelWeights:
    weights: Mapping[str, float]
    provenance: str = "uniform"
    normalized: bool = True

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        if not self.weights:
            raise ValueError("no model weights given")
        for m, w in self.weights.items():
            if not math.isfinite(w) or w < 0:
                raise ValueError(f"weight for {m!r} must be finite and >= 0, got {w}")
        if self.normalized and abs(sum(self.weights.values()) - 1.0) > 1e-9:
            raise ValueError("normalized weights must sum to 1")
        object.__setattr__(self, "weights", dict(self.weights))

    @property
    def g(self) -> int:
        return len(self.weights)

    @property
    def models(self) -> tuple[str, ...]:
        return tuple(self.weights)

    def __getitem__(self, model):
        return self.weights[model]

    @classmethod
    def uniform(cls, models: Sequence[str]) -> ModelWeights:
        models = list(dict.fromkeys(models))
        return cls({m: 1.0 / len(models) for m in models}, "uniform")

    def restricted(self, models: Sequence[str]) -> ModelWeights:
        """Weights of ``models`` only, renormalized."""
        missing = [m for m in models if m not in self.weights]
        if missing:
            raise DataError(f"no weight for model(s) {', '.join(missing)}")
        sub = {m: self.weights[m] for m in models}
        total = sum(sub.values())
        if total <= 0:
            return ModelWeights.uniform(models)
        return ModelWeights({m: w / total for m, w in sub.items()}, self.provenance)


@dataclass(frozen=True)
class CorpusProfile:
    corpus_id: str
    cdoc: np.ndarray
    weights: ModelWeights

    def __post_init__(self):
        cdoc = np.asarray(self.cdoc, dtype=np.float64)
        if not np.all(np.isfinite(cdoc)):
            raise ValueError("corpus vector must be finite")
        object.__setattr__(self, "cdoc", cdoc)

    def to_json(self) -> dict:
        return {
            "corpus_id": self.corpus_id,
            "cdoc": [float(x) for x in self.cdoc],
            "weights": dict(self.weights.weights),
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> CorpusProfile:
        try:
            weights = {str(k): float(v) for k, v in obj["weights"].items()}
            total = sum(weights.values())
            return cls(
                str(obj["corpus_id"]),
                np.asarray(obj["cdoc"], dtype=np.float64),
                ModelWeights(weights, "trained", normalized=abs(total - 1.0) <= 1e-9),
            )
        except (KeyError, TypeError, AttributeError, ValueError) as exc:
            raise FormatError(f"malformed corpus profile: {exc}") from None


def save_profiles(profiles: Sequence[CorpusProfile], path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump([p.to_json() for p in profiles], fh, indent=2)
        fh.write("\n")


def load_profiles(path) -> list[CorpusProfile]:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON ({exc})", path) from None
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list):
        raise FormatError("expected a JSON array of profiles", path)
    return [CorpusProfile.from_json(obj) for obj in data]


@dataclass(frozen=True)
class TrainingExample:
    document: Document
    gold: str

    def __post_init__(self):
        if not len(self.document.sentences):
            raise ValueError(f"training document {self.document.id!r} is empty")
        if not self.gold.strip():
            raise ValueError(f"gold summary for {self.document.id!r} is empty")


def cweight(per_model_summaries: Mapping[str, Summary], weights: ModelWeights, n: int) -> RankVector:
    """Per-sentence sum of the weights of the models whose summary contains it."""
    if set(per_model_summaries) != set(weights.weights):
        raise DataError(
            "model/weight mismatch: summaries for "
            f"{sorted(per_model_summaries)}, weights for {sorted(weights.weights)}"
        )
    scores = np.zeros(n)
    for model in weights.models:
        w = weights[model]
        for idx in per_model_summaries[model].indices:
            scores[idx] += w
    return RankVector("ensemble", scores)


def consensus_summary(
    doc: Document,
    rankings: Mapping[str, object],
    weights: ModelWeights,
    budget: Budget,
) -> Summary:
    """Combine per-model rankings of ``doc`` into one summary.

    Each model is summarized alone under ``budget``; sentences chosen by at
    least one model are ordered by cWeight, then by weighted rank position
    across models, then by index, and selected under the same budget.
    """
    n = len(doc.sentences)
    summaries = {m: select_summary(rankings[m], doc, budget) for m in weights.models}
    scores = cweight(summaries, weights, n).scores
    tiebreak = np.zeros(n)
    for m in weights.models:
        pos = np.full(n, float(n))
        for rank, idx in enumerate(rank_order(rankings[m])):
            pos[idx] = rank
        tiebreak += weights[m] * pos
    candidates = sorted((i for i in range(n) if scores[i] > 0), key=lambda i: (-scores[i], tiebreak[i], i))
    out = select_summary(candidates, doc, budget)
    if out.warning is None and not candidates and n:
        return Summary(doc.id, (), (), budget, "no model selected any sentence")
    return out


def ensemble_summarize(
    doc: Document,
    weights: ModelWeights,
    models: Sequence[str],
    budget: Budget,
    rank_fn: Callable[[str, Document], object],
) -> Summary:
    """Run every model through ``rank_fn`` and build the consensus summary."""
    w = weights if list(models) == list(weights.models) else weights.restricted(models)
    rankings = {m: rank_fn(m, doc) for m in w.models}
    return consensus_summary(doc, rankings, w, budget)


def summary_f1(candidate: Summary | str, gold: str, granularity: str = "bigram") -> float:
    text = candidate.text if isinstance(candidate, Summary) else candidate
    if granularity == "bigram":
        return rouge_n(text, [gold], 2).f1
    if granularity == "unigram":
        return rouge_n(text, [gold], 1).f1
    if granularity == "sentence":
        from .preprocess import split_sentences

        cand = candidate.sentences if isinstance(candidate, Summary) else [s.raw for s in split_sentences(text)]
        return sentence_f1(cand, [s.raw for s in split_sentences(gold)])
    raise ValueError(f"unknown F1 granularity {granularity!r}")


@dataclass
class TrainingReport:
    mean_f1: dict[str, float]
    per_document: dict[str, dict[str, float]] = field(default_factory=dict)
    failures: list[tuple[str, str, str]] = field(default_factory=list)


def train_weights(
    examples: Sequence[TrainingExample],
    models: Sequence[str],
    summarize_fn: Callable[[str, Document], Summary | str],
    granularity: str = "bigram",
    normalize: bool = True,
    report: TrainingReport | None = None,
) -> ModelWeights:
    """Model weights from mean F1 of each model's standalone summaries.

    ``summarize_fn(model, document)`` produces a model's summary. A model
    that raises on a document scores F1 = 0 there and a warning is issued.
    """
    if not examples:
        raise DataError("no training examples")
    models = list(dict.fromkeys(models))
    if not models:
        raise DataError("no models to train")
    ordered = sorted(examples, key=lambda ex: ex.document.id)
    means = {}
    for model in models:
        total = 0.0
        for ex in ordered:
            try:
                score = summary_f1(summarize_fn(model, ex.document), ex.gold, granularity)
            except (HybridSummError, ValueError, KeyError) as exc:
                warnings.warn(f"model {model!r} failed on {ex.document.id!r}: {exc}", stacklevel=2)
                if report is not None:
                    report.failures.append((model, ex.document.id, str(exc)))
                score = 0.0
            if report is not None:
                report.per_document.setdefault(ex.document.id, {})[model] = score
            total += score
        means[model] = total / len(ordered)
    if report is not None:
        report.mean_f1.update(means)
    if not normalize:
        return ModelWeights(means, "trained", normalized=False)
    mass = sum(means.values())
    if mass <= 0:
        warnings.warn("every model scored F1 = 0; falling back to uniform weights", stacklevel=2)
        return ModelWeights({m: 1.0 / len(models) for m in models}, "trained")
    return ModelWeights({m: v / mass for m, v in means.items()}, "trained")


def document_vector(doc: Document, table: WordVectorTable, token_filter: str = "content") -> np.ndarray:
    """Mean of the document's GloVe sentence vectors."""
    if not len(doc.sentences):
        return np.zeros(table.dim)
    vecs = [glove_sentence_vector(s, table, token_filter).values for s in doc.sentences]
    out = np.zeros(table.dim)
    for v in vecs:
        out += v
    return out / len(vecs)


def corpus_vector(docs: Sequence[Document], table: WordVectorTable, token_filter: str = "content") -> np.ndarray:
    """Sum of the document vectors of ``docs``."""
    if not docs:
        raise DataError("corpus vector needs at least one document")
    out = np.zeros(table.dim)
    for doc in sorted(docs, key=lambda d: d.id):
        vec = document_vector(doc, table, token_filter)
        if not np.any(vec):
            warnings.warn(f"document {doc.id!r} has no in-vocabulary words", stacklevel=2)
        out += vec
    return out


def nearest_profile(doc: Document, profiles: Sequence[CorpusProfile], table: WordVectorTable,
                    token_filter: str = "content") -> CorpusProfile:
    if not profiles:
        raise DataError("no corpus profiles to choose from")
    query = document_vector(doc, table, token_filter)
    best, best_sim = profiles[0], -math.inf
    for p in profiles:
        if p.cdoc.shape != query.shape:
            raise DataError(f"profile {p.corpus_id!r} has dimension {p.cdoc.shape[0]}, expected {table.dim}")
        sim = cosine_similarity(query, p.cdoc)
        if sim > best_sim:
            best, best_sim = p, sim
    return best


def nearest_corpus_weights(doc: Document, profiles: Sequence[CorpusProfile], table: WordVectorTable,
                           token_filter: str = "content") -> ModelWeights:
    """Weights of the profile whose corpus vector is most cosine-similar to ``doc``."""
    w = nearest_profile(doc, profiles, table, token_filter).weights
    return ModelWeights(w.weights, "nearest", normalized=w.normalized)
