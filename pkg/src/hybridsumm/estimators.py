"""scikit-learn style estimators over the summarization pipeline."""

from __future__ import annotations

from typing import Sequence

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .config import PipelineConfig, parse_models
from .ensemble import ModelWeights, TrainingExample, TrainingReport
from .evaluate import rouge_n
from .pipeline import Pipeline, Resources
from .preprocess import Document
from .ranking import RankedList


def check_corpus(X, doc_ids: Sequence[str] | None = None) -> list[tuple[str, object]]:
    """Normalize ``X`` to ``(doc_id, text_or_document)`` pairs.

    ``X`` may be a sequence of strings, of :class:`Document`, or a mapping of
    id to text. Plain strings get ids ``"0"``, ``"1"``, ... unless
    ``doc_ids`` is given.
    """
    if isinstance(X, str):
        raise TypeError("expected a sequence of documents, got a single string")
    if isinstance(X, dict):
        items = [(str(k), v) for k, v in X.items()]
    else:
        try:
            X = list(X)
        except TypeError:
            raise TypeError(f"expected a sequence of documents, got {type(X).__name__}") from None
        if doc_ids is not None:
            if len(doc_ids) != len(X):
                raise ValueError(f"{len(doc_ids)} ids for {len(X)} documents")
            ids = [str(i) for i in doc_ids]
        else:
            ids = [x.id if isinstance(x, Document) else str(i) for i, x in enumerate(X)]
        items = list(zip(ids, X))
    if not items:
        raise ValueError("empty corpus")
    for doc_id, x in items:
        if not isinstance(x, (str, Document)):
            raise TypeError(f"document {doc_id!r} is {type(x).__name__}, expected str or Document")
    if len({i for i, _ in items}) != len(items):
        raise ValueError("document ids must be unique")
    return items


def check_gold(y, n: int) -> list[str]:
    y = list(y)
    if len(y) != n:
        raise ValueError(f"{len(y)} gold summaries for {n} documents")
    for i, g in enumerate(y):
        if not isinstance(g, str) or not g.strip():
            raise ValueError(f"gold summary {i} is empty or not a string")
    return y


class _PipelineParams:
    """Shared parameter plumbing for the estimators."""

    def _config(self) -> PipelineConfig:
        models = self.models
        if isinstance(models, str):
            models = parse_models(models)
        return PipelineConfig(
            models=tuple(models),
            rank=self.rank,
            k=self.k,
            chars=self.chars,
            words=self.words,
            lexicon=self.lexicon,
            vectors=self.vectors,
            embeddings=self.embeddings,
            stopwords=self.stopwords,
            jobs=self.jobs,
            min_corpus_size=self.min_corpus_size,
        )

    def _pipeline(self, items, resources: Resources) -> tuple[Pipeline, list[Document]]:
        pipe = Pipeline(self.config_, resources)
        texts = {i: x for i, x in items if isinstance(x, str)}
        pipe.add_documents(texts)
        pipe.corpus.extend(x for _, x in items if isinstance(x, Document))
        by_id = {d.id: d for d in pipe.corpus}
        return pipe, [by_id[i] if isinstance(x, str) else x for i, x in items]


class HybridSummarizer(_PipelineParams, BaseEstimator):
    """Weighted-consensus extractive summarizer.

    ``fit(X, y)`` trains model weights from gold summaries ``y`` (uniform
    weights when ``y`` is None); ``predict(X)`` returns one summary string
    per document.
    """

    def __init__(self, models="jaccard,textrank,tfidf", rank="rscore", k=None, chars=None, words=None,
                 lexicon=None, vectors=None, embeddings=None, stopwords=None, jobs=1,
                 f1="bigram", normalize=True, min_corpus_size=20):
        self.models = models
        self.rank = rank
        self.k = k
        self.chars = chars
        self.words = words
        self.lexicon = lexicon
        self.vectors = vectors
        self.embeddings = embeddings
        self.stopwords = stopwords
        self.jobs = jobs
        self.f1 = f1
        self.normalize = normalize
        self.min_corpus_size = min_corpus_size

    def _config(self) -> PipelineConfig:
        base = super()._config()
        return base.update({"ensemble.f1": self.f1, "ensemble.normalize": self.normalize})

    def fit(self, X, y=None, doc_ids=None):
        items = check_corpus(X, doc_ids)
        self.config_ = self._config()
        self.resources_ = Resources.load(self.config_)
        if y is None:
            self.weights_ = ModelWeights.uniform(self.config_.models)
            self.mean_f1_ = None
        else:
            gold = check_gold(y, len(items))
            pipe, docs = self._pipeline(items, self.resources_)
            report = TrainingReport({})
            self.weights_ = pipe.train([TrainingExample(d, g) for d, g in zip(docs, gold)], report)
            self.mean_f1_ = dict(report.mean_f1)
        self.n_documents_ = len(items)
        return self

    def summarize(self, X, doc_ids=None):
        """:class:`~hybridsumm.ranking.Summary` objects for ``X``."""
        check_is_fitted(self, "weights_")
        pipe, docs = self._pipeline(check_corpus(X, doc_ids), self.resources_)
        return pipe.summarize_all(docs, self.weights_)

    def predict(self, X, doc_ids=None) -> list[str]:
        return [s.text for s in self.summarize(X, doc_ids)]

    def score(self, X, y, doc_ids=None) -> float:
        """Mean ROUGE-2 F1 of the predictions against ``y``."""
        preds = self.predict(X, doc_ids)
        gold = check_gold(y, len(preds))
        return float(np.mean([rouge_n(p, [g], 2).f1 for p, g in zip(preds, gold)]))


class SentenceRanker(_PipelineParams, TransformerMixin, BaseEstimator):
    """Per-sentence scores of a single model, one array per document.

    Score vectors come straight from the model; rank lists from hierarchical
    clustering are turned into scores ``n - position`` so that higher is
    always better.
    """

    def __init__(self, model="textrank", rank="rscore", lexicon=None, vectors=None, embeddings=None,
                 stopwords=None, min_corpus_size=20):
        self.model = model
        self.rank = rank
        self.lexicon = lexicon
        self.vectors = vectors
        self.embeddings = embeddings
        self.stopwords = stopwords
        self.min_corpus_size = min_corpus_size

    def _config(self) -> PipelineConfig:
        return PipelineConfig(
            models=(self.model,),
            rank=self.rank,
            lexicon=self.lexicon,
            vectors=self.vectors,
            embeddings=self.embeddings,
            stopwords=self.stopwords,
            min_corpus_size=self.min_corpus_size,
        )

    def fit(self, X=None, y=None):
        self.config_ = self._config()
        self.resources_ = Resources.load(self.config_)
        return self

    def transform(self, X, doc_ids=None) -> list[np.ndarray]:
        check_is_fitted(self, "config_")
        pipe, docs = self._pipeline(check_corpus(X, doc_ids), self.resources_)
        out = []
        for doc in docs:
            r = pipe.rank(self.model, doc)
            if isinstance(r, RankedList):
                scores = np.zeros(len(doc.sentences))
                for pos, idx in enumerate(r.order):
                    scores[idx] = len(r.order) - pos
                out.append(scores)
            else:
                out.append(np.asarray(r.scores, dtype=np.float64))
        return out
