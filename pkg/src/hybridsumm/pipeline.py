"""End-to-end wiring: resources, per-model rankings, summaries and training."""

from __future__ import annotations

import os
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .config import PipelineConfig
from .ensemble import (
    CorpusProfile,
    ModelWeights,
    TrainingExample,
    TrainingReport,
    consensus_summary,
    corpus_vector,
    load_profiles,
    nearest_corpus_weights,
    train_weights,
)
from .exceptions import DataError, ResourceError
from .lexicon import (
    Lexicon,
    SentenceEmbeddingStore,
    WordVectorTable,
    default_stopwords,
    load_lexicon,
    load_sentence_embeddings,
    load_stopwords,
    load_vectors,
)
from .preprocess import Document, FrequencyMatrix, build_frequency_matrix, preprocess_document
from .ranking import Summary, hierarchical_cluster_rank, relevance_scores, select_summary
from .semmodels import embedding_similarity_matrix, glove_similarity_matrix, wordnet_similarity_matrix
from .statmodels import SimilarityMatrix, similarity_matrix, textrank, tfidf_matrix, tfidf_sentence_scores


@dataclass(frozen=True)
class Resources:
    lexicon: Lexicon | None = None
    vectors: WordVectorTable | None = None
    embeddings: SentenceEmbeddingStore | None = None
    stopwords: frozenset[str] = frozenset()
    profiles: tuple[CorpusProfile, ...] = ()

    @classmethod
    def load(cls, config: PipelineConfig) -> Resources:
        """Load every resource path set in ``config``."""
        config.check_resources()
        return cls(
            lexicon=load_lexicon(config.lexicon) if config.lexicon else None,
            vectors=load_vectors(config.vectors) if config.vectors else None,
            embeddings=load_sentence_embeddings(config.embeddings) if config.embeddings else None,
            stopwords=load_stopwords(config.stopwords) if config.stopwords else default_stopwords(),
            profiles=tuple(load_profiles(config.profiles)) if config.profiles else (),
        )


def read_documents(paths: Iterable[str]) -> dict[str, str]:
    """Map file stem to text; ids must be unique."""
    out: dict[str, str] = {}
    for path in paths:
        doc_id = os.path.splitext(os.path.basename(path))[0]
        if doc_id in out:
            raise DataError(f"duplicate document id {doc_id!r} ({path})")
        with open(path, encoding="utf-8") as fh:
            out[doc_id] = fh.read()
    return out


class Pipeline:
    """Preprocessed corpus plus everything needed to rank and summarize it.

    ``corpus`` is the document collection used for document-frequency
    filtering; documents summarized later are looked up in it or, if absent,
    treated as a corpus of their own.
    """

    def __init__(self, config: PipelineConfig | None = None, resources: Resources | None = None):
        self.config = config or PipelineConfig()
        self.resources = resources or Resources(stopwords=default_stopwords())
        self.corpus: list[Document] = []
        self._fm: dict[tuple[str, str], FrequencyMatrix] = {}
        self._lock = threading.Lock()

    # -- documents -----------------------------------------------------------

    def preprocess(self, text: str, doc_id: str) -> Document:
        return preprocess_document(
            text, doc_id, self.resources.lexicon, self.resources.stopwords, self.config.abbreviations
        )

    def add_documents(self, texts: Mapping[str, str]) -> list[Document]:
        docs = self.map(lambda item: self.preprocess(item[1], item[0]), list(texts.items()))
        self.corpus.extend(docs)
        return docs

    def map(self, fn: Callable, items: Sequence) -> list:
        """``[fn(x) for x in items]``, spread over ``config.jobs`` threads."""
        if self.config.jobs <= 1 or len(items) <= 1:
            return [fn(x) for x in items]
        with ThreadPoolExecutor(max_workers=self.config.jobs) as pool:
            return list(pool.map(fn, items))

    def frequency_matrix(self, doc: Document) -> FrequencyMatrix:
        key = (doc.id, self.config.count_form)
        fm = self._fm.get(key)
        if fm is None:
            corpus = self.corpus if any(d.id == doc.id for d in self.corpus) else [doc]
            fm = build_frequency_matrix(
                corpus,
                doc.id,
                None,
                self.config.low_df,
                self.config.high_df,
                self.config.min_corpus_size,
                self.config.count_form,
            )
            with self._lock:
                self._fm[key] = fm
        return fm

    # -- models --------------------------------------------------------------

    def similarity(self, model: str, doc: Document) -> SimilarityMatrix:
        cfg, res = self.config, self.resources
        if model in ("jaccard", "cosine"):
            return similarity_matrix(self.frequency_matrix(doc), model, cfg.cosine_mode)
        if model == "wordnet":
            if res.lexicon is None:
                raise ResourceError("model 'wordnet' needs a lexicon")
            return wordnet_similarity_matrix(doc, res.lexicon, cfg.wordnet_threshold, cfg.dice_classic, cfg.token_filter)
        if model == "glove":
            if res.vectors is None:
                raise ResourceError("model 'glove' needs a word-vector table")
            return glove_similarity_matrix(doc, res.vectors, cfg.token_filter)
        if model == "embedding":
            if res.embeddings is None:
                raise ResourceError("model 'embedding' needs a sentence-embedding sidecar")
            return embedding_similarity_matrix(doc, res.embeddings)
        raise ValueError(f"{model!r} is not a similarity model")

    def textrank_scores(self, doc: Document):
        cfg = self.config
        sim = similarity_matrix(self.frequency_matrix(doc), "cosine", "similarity")
        return textrank(sim, cfg.textrank_d, cfg.textrank_epsilon, cfg.textrank_max_iter)

    def tfidf_scores(self, doc: Document):
        tm = tfidf_matrix(self.frequency_matrix(doc))
        return tfidf_sentence_scores(doc, tm, self.config.count_form, self.config.tfidf_position)

    def rank(self, model: str, doc: Document):
        """RankVector or RankedList for one model on ``doc``."""
        if model == "textrank":
            return self.textrank_scores(doc)
        if model == "tfidf":
            return self.tfidf_scores(doc)
        sim = self.similarity(model, doc)
        if self.config.rank == "hcluster":
            return hierarchical_cluster_rank(sim)
        return relevance_scores(sim)

    def model_summary(self, model: str, doc: Document) -> Summary:
        return select_summary(self.rank(model, doc), doc, self.config.budget)

    # -- ensemble ------------------------------------------------------------

    def weights_for(self, doc: Document, weights: ModelWeights | None = None) -> ModelWeights:
        models = self.config.models
        if weights is None and self.resources.profiles:
            if self.resources.vectors is None:
                raise ResourceError("profile lookup needs a word-vector table (--vectors)")
            weights = nearest_corpus_weights(doc, self.resources.profiles, self.resources.vectors,
                                             self.config.token_filter)
        if weights is None:
            return ModelWeights.uniform(models)
        if tuple(weights.models) == tuple(models) and weights.normalized:
            return weights
        return weights.restricted(models)

    def summarize(self, doc: Document, weights: ModelWeights | None = None) -> Summary:
        w = self.weights_for(doc, weights)
        rankings = {m: self.rank(m, doc) for m in w.models}
        return consensus_summary(doc, rankings, w, self.config.budget)

    def summarize_all(self, docs: Sequence[Document], weights: ModelWeights | None = None) -> list[Summary]:
        return self.map(lambda d: self.summarize(d, weights), list(docs))

    def train(self, examples: Sequence[TrainingExample], report: TrainingReport | None = None) -> ModelWeights:
        return train_weights(
            examples,
            self.config.models,
            self.model_summary,
            self.config.f1_granularity,
            self.config.normalize_weights,
            report,
        )

    def profile(self, corpus_id: str, docs: Sequence[Document], weights: ModelWeights) -> CorpusProfile:
        if self.resources.vectors is None:
            raise ResourceError("corpus profiles need a word-vector table (--vectors)")
        cdoc = corpus_vector(docs, self.resources.vectors, self.config.token_filter)
        return CorpusProfile(corpus_id, cdoc, weights)
