"""Statistical rankers: Jaccard and cosine similarity matrices, TextRank, TF-IDF."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .lexicon import NOUN
from .preprocess import Document, FrequencyMatrix

SIMILARITY_MODELS = ("jaccard", "cosine", "wordnet", "glove", "embedding")
POSITION_MODES = ("linear", "reversed", "off")


@dataclass(frozen=True)
class SimilarityMatrix:
    model: str
    values: np.ndarray

    @property
    def size(self) -> int:
        return self.values.shape[0]

    def check(self, atol: float = 1e-12) -> None:
        """Raise ValueError unless symmetric with entries in [0, 1]."""
        v = self.values
        if v.ndim != 2 or v.shape[0] != v.shape[1]:
            raise ValueError(f"similarity matrix must be square, got {v.shape}")
        if not np.allclose(v, v.T, rtol=0, atol=atol):
            raise ValueError("similarity matrix is not symmetric")
        if v.size and (v.min() < 0 or v.max() > 1):
            raise ValueError("similarity entries must lie in [0, 1]")


@dataclass(frozen=True)
class RankVector:
    model: str
    scores: np.ndarray

    def __len__(self):
        return len(self.scores)

    def order(self) -> list[int]:
        """Sentence indices best first; equal scores go to the smaller index."""
        s = self.scores
        return sorted(range(len(s)), key=lambda i: (-s[i], i))


@dataclass(frozen=True)
class TfIdfMatrix:
    words: tuple[str, ...]
    weights: np.ndarray  # words x sentences
    idf: np.ndarray

    @property
    def sentence_count(self) -> int:
        return self.weights.shape[1]


def jaccard_similarity(a, b) -> float:
    a, b = set(a), set(b)
    if not a and not b:
        return 1.0
    return len(a & b) / len(a | b)


def cosine_similarity(u, v, mode: str = "similarity") -> float:
    """``u.v / (|u| |v|)``; ``mode="distance"`` returns one minus that.

    A zero-norm argument has similarity 0 by convention.
    """
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    if u.shape != v.shape:
        raise ValueError(f"length mismatch: {u.shape} vs {v.shape}")
    nu = math.sqrt(float(np.dot(u, u)))
    nv = math.sqrt(float(np.dot(v, v)))
    sim = 0.0 if nu == 0.0 or nv == 0.0 else float(np.dot(u, v)) / (nu * nv)
    if mode == "similarity":
        return sim
    if mode == "distance":
        return 1.0 - sim
    raise ValueError(f"unknown cosine mode {mode!r}")


def cosine_matrix(vectors: np.ndarray, model: str, mode: str = "similarity") -> SimilarityMatrix:
    """Pairwise cosine matrix of row vectors, clamped to [0, 1].

    Each unordered pair is computed once. Nonzero rows get a unit diagonal in
    similarity mode; zero rows are similar to nothing, themselves included.
    """
    n = len(vectors)
    out = np.zeros((n, n))
    nonzero = [bool(np.any(vectors[i])) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            val = min(1.0, max(0.0, cosine_similarity(vectors[i], vectors[j], mode)))
            out[i, j] = out[j, i] = val
        if mode == "similarity":
            out[i, i] = 1.0 if nonzero[i] else 0.0
        else:
            out[i, i] = 0.0 if nonzero[i] else 1.0
    return SimilarityMatrix(model, out)


def similarity_matrix(fm: FrequencyMatrix, measure: str, cosine_mode: str = "similarity") -> SimilarityMatrix:
    """Sentence similarity over frequency-matrix rows (Jaccard or cosine)."""
    if measure == "cosine":
        return cosine_matrix(fm.counts.astype(np.float64), "cosine", cosine_mode)
    if measure != "jaccard":
        raise ValueError(f"unknown measure {measure!r}")
    n = fm.sentence_count
    sets = [frozenset(np.flatnonzero(fm.counts[i])) for i in range(n)]
    out = np.zeros((n, n))
    for i in range(n):
        out[i, i] = 1.0
        for j in range(i + 1, n):
            out[i, j] = out[j, i] = jaccard_similarity(sets[i], sets[j])
    return SimilarityMatrix("jaccard", out)


def _as_array(sim) -> np.ndarray:
    return np.asarray(sim.values if isinstance(sim, SimilarityMatrix) else sim, dtype=np.float64)


def transition_matrix(sim) -> np.ndarray:
    """Row-stochastic matrix from similarities, self-loops removed.

    Rows with no outgoing similarity become uniform.
    """
    w = _as_array(sim).copy()
    n = w.shape[0]
    np.fill_diagonal(w, 0.0)
    sums = w.sum(axis=1)
    p = np.empty_like(w)
    for i in range(n):
        p[i] = w[i] / sums[i] if sums[i] > 0 else 1.0 / n
    return p


def textrank(sim, d: float = 0.85, epsilon: float = 1e-6, max_iter: int = 200) -> RankVector:
    """TextRank scores by damped power iteration.

    Iterates ``R <- (1 - d)/n + d * P^T R`` from the uniform vector, where
    ``P`` is :func:`transition_matrix` of ``sim``, until the L1 change falls
    below ``epsilon`` or ``max_iter`` steps are taken.
    """
    if not 0 < d < 1:
        raise ValueError("damping d must lie in (0, 1)")
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    n = _as_array(sim).shape[0]
    if n == 0:
        return RankVector("textrank", np.zeros(0))
    pt = transition_matrix(sim).T
    r = np.full(n, 1.0 / n)
    teleport = (1.0 - d) / n
    for _ in range(max_iter):
        nxt = teleport + d * (pt @ r)
        delta = np.abs(nxt - r).sum()
        r = nxt
        if delta < epsilon:
            break
    r = r / r.sum()
    return RankVector("textrank", r)


def tfidf_matrix(fm: FrequencyMatrix) -> TfIdfMatrix:
    """``w[i, j] = tf[i, j] * ln(N / df[i])`` with sentences as documents."""
    tf = fm.counts.T.astype(np.float64)
    n = fm.sentence_count
    df = (tf > 0).sum(axis=1)
    idf = np.array([math.log(n / k) if k > 0 else 0.0 for k in df])
    return TfIdfMatrix(fm.words, tf * idf[:, None], idf)


def positional_factor(index: int, total: int, mode: str = "linear") -> float:
    if mode == "linear":
        return (index + 1) / total
    if mode == "reversed":
        return (total - index) / total
    if mode == "off":
        return 1.0
    raise ValueError(f"unknown position mode {mode!r}")


def tfidf_sentence_scores(
    doc: Document,
    tm: TfIdfMatrix,
    count_form: str = "stem",
    position: str = "linear",
) -> RankVector:
    """Share of each sentence's tf-idf mass carried by nouns, position weighted."""
    column = {w: i for i, w in enumerate(tm.words)}
    total = len(doc.sentences)
    scores = np.zeros(total)
    for j, sent in enumerate(doc.sentences):
        mass = float(tm.weights[:, j].sum()) if tm.weights.size else 0.0
        if mass <= 0:
            continue
        noun_mass = 0.0
        for tok in sent.tokens:
            if tok.pos != NOUN or tok.is_stopword or not tok.has_letter:
                continue
            i = column.get(tok.form(count_form))
            if i is not None:
                noun_mass += tm.idf[i]
        scores[j] = noun_mass / mass * positional_factor(j, total, position)
    return RankVector("tfidf", scores)

