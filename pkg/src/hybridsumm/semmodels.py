"""Semantic sentence similarity: WordNet matching, GloVe averages, stored embeddings."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass

import numpy as np

from .exceptions import ResourceError
from .lexicon import Lexicon, SentenceEmbeddingStore, WordVectorTable
from .matching import Matching, hungarian_max_matching
from .preprocess import Document, Sentence, Token
from .statmodels import SimilarityMatrix, cosine_matrix

TOKEN_FILTERS = ("content", "all")


@dataclass(frozen=True)
class SenseAssignment:
    tokens: tuple[Token, ...]
    senses: tuple[str | None, ...]

    def __len__(self):
        return len(self.tokens)


@dataclass(frozen=True)
class PairSimilarityMatrix:
    values: np.ndarray


@dataclass(frozen=True)
class SentenceVector:
    model: str
    values: np.ndarray


def semantic_tokens(sentence: Sentence, token_filter: str = "content") -> list[Token]:
    if token_filter == "content":
        return [t for t in sentence.tokens if t.is_content]
    if token_filter == "all":
        return [t for t in sentence.tokens if t.has_letter]
    raise ValueError(f"unknown token filter {token_filter!r}")


def lesk_disambiguate(token: Token, context, lexicon: Lexicon) -> str | None:
    """Sense of ``token`` whose gloss and examples overlap ``context`` most.

    Ties, including zero overlap everywhere, go to the first-listed sense.
    """
    candidates = lexicon.lookup(token.lemma or token.normalized, token.pos)
    if not candidates:
        return None
    context = set(context)
    best, best_overlap = candidates[0], -1
    for sid in candidates:
        overlap = len(lexicon.gloss_bag(sid) & context)
        if overlap > best_overlap:
            best, best_overlap = sid, overlap
    return best


def disambiguate_sentence(sentence: Sentence, lexicon: Lexicon, token_filter: str = "content") -> SenseAssignment:
    tokens = semantic_tokens(sentence, token_filter)
    lemmas = [t.lemma or t.normalized for t in tokens]
    senses = []
    for k, tok in enumerate(tokens):
        context = lemmas[:k] + lemmas[k + 1:]
        senses.append(lesk_disambiguate(tok, context, lexicon))
    return SenseAssignment(tuple(tokens), tuple(senses))


def path_node_count(s1: str, s2: str, lexicon: Lexicon) -> int | None:
    """Nodes on the shortest undirected is-a path between two synsets."""
    if s1 == s2:
        return 1
    seen = {s1}
    frontier = deque([(s1, 1)])
    while frontier:
        node, depth = frontier.popleft()
        for nb in lexicon.neighbors(node):
            if nb == s2:
                return depth + 1
            if nb not in seen:
                seen.add(nb)
                frontier.append((nb, depth + 1))
    return None


def synset_path_similarity(s1: str, s2: str, lexicon: Lexicon) -> float:
    """One over the path length in nodes; 0 when the synsets are unconnected."""
    for sid in (s1, s2):
        if sid not in lexicon.synsets:
            raise KeyError(f"unknown synset {sid!r}")
    nodes = path_node_count(s1, s2, lexicon)
    return 0.0 if nodes is None else 1.0 / nodes


class _PathCache:
    def __init__(self, lexicon: Lexicon):
        self.lexicon = lexicon
        self.memo: dict[tuple[str, str], float] = {}

    def __call__(self, a: str, b: str) -> float:
        key = (a, b) if a <= b else (b, a)
        val = self.memo.get(key)
        if val is None:
            val = self.memo[key] = synset_path_similarity(a, b, self.lexicon)
        return val


def pair_similarity_matrix(a: SenseAssignment, b: SenseAssignment, lexicon: Lexicon, _sim=None) -> PairSimilarityMatrix:
    sim = _sim or _PathCache(lexicon)
    out = np.zeros((len(a.senses), len(b.senses)))
    for i, si in enumerate(a.senses):
        if si is None:
            continue
        for j, sj in enumerate(b.senses):
            if sj is not None:
                out[i, j] = sim(si, sj)
    return PairSimilarityMatrix(out)


def dice_from_matching(matching: Matching, len_a: int, len_b: int, threshold: float = 0.5,
                       dice_classic: bool = False) -> float:
    """Matched pairs at or above ``threshold`` over ``len_a + len_b``."""
    if len_a + len_b == 0:
        return 0.0
    common = sum(1 for _, _, w in matching.pairs if w >= threshold)
    factor = 2.0 if dice_classic else 1.0
    return factor * common / (len_a + len_b)


def _assignment_similarity(a: SenseAssignment, b: SenseAssignment, lexicon, threshold, dice_classic, sim=None):
    if not len(a) and not len(b):
        return 0.0
    s = pair_similarity_matrix(a, b, lexicon, sim)
    return dice_from_matching(hungarian_max_matching(s), len(a), len(b), threshold, dice_classic)


def wordnet_sentence_similarity(
    a: Sentence,
    b: Sentence,
    lexicon: Lexicon,
    threshold: float = 0.5,
    dice_classic: bool = False,
    token_filter: str = "content",
) -> float:
    """Sense-matching similarity of two sentences.

    Both sentences are disambiguated, their sense-pair path similarities are
    matched one-to-one with the Hungarian method, and matches weighing at
    least ``threshold`` are counted against the two token counts. By default
    the count is divided by ``|A| + |B|`` without the usual factor 2;
    ``dice_classic=True`` restores it.
    """
    sa = disambiguate_sentence(a, lexicon, token_filter)
    sb = disambiguate_sentence(b, lexicon, token_filter)
    return _assignment_similarity(sa, sb, lexicon, threshold, dice_classic)


def wordnet_similarity_matrix(
    doc: Document,
    lexicon: Lexicon,
    threshold: float = 0.5,
    dice_classic: bool = False,
    token_filter: str = "content",
) -> SimilarityMatrix:
    """Pairwise :func:`wordnet_sentence_similarity` with a unit diagonal.

    Each sentence is disambiguated once. Sentences without eligible tokens
    get an all-zero row.
    """
    assignments = [disambiguate_sentence(s, lexicon, token_filter) for s in doc.sentences]
    sim = _PathCache(lexicon)
    n = len(assignments)
    out = np.zeros((n, n))
    for i in range(n):
        if not len(assignments[i]):
            continue
        out[i, i] = 1.0
        for j in range(i + 1, n):
            if not len(assignments[j]):
                continue
            val = _assignment_similarity(assignments[i], assignments[j], lexicon, threshold, dice_classic, sim)
            out[i, j] = out[j, i] = min(1.0, val)
    return SimilarityMatrix("wordnet", out)


def vector_key(token: Token, table: WordVectorTable):
    """Vector for a token: by lemma first, then by lowercased surface."""
    vec = table.get(token.lemma) if token.lemma else None
    if vec is None:
        vec = table.get(token.normalized)
    return vec


def glove_sentence_vector(sentence: Sentence, table: WordVectorTable, token_filter: str = "content") -> SentenceVector:
    """Frequency-weighted mean of the in-vocabulary word vectors of a sentence."""
    counts: Counter = Counter()
    vectors = {}
    for tok in semantic_tokens(sentence, token_filter):
        vec = vector_key(tok, table)
        if vec is None:
            continue
        key = tok.lemma or tok.normalized
        counts[key] += 1
        vectors.setdefault(key, vec)
    total = sum(counts.values())
    out = np.zeros(table.dim)
    if total == 0:
        return SentenceVector("glove", out)
    for key in sorted(counts):
        out += counts[key] * vectors[key]
    return SentenceVector("glove", out / total)


def glove_similarity_matrix(doc: Document, table: WordVectorTable, token_filter: str = "content") -> SimilarityMatrix:
    vecs = np.array([glove_sentence_vector(s, table, token_filter).values for s in doc.sentences])
    return cosine_matrix(vecs.reshape(len(doc.sentences), table.dim), "glove")


def embedding_similarity_matrix(doc: Document, store: SentenceEmbeddingStore) -> SimilarityMatrix:
    rows = []
    for s in doc.sentences:
        vec = store.get(doc.id, s.index)
        if vec is None:
            raise ResourceError(f"no sentence embedding for ({doc.id}, {s.index})")
        rows.append(vec)
    vecs = np.array(rows).reshape(len(doc.sentences), store.dim)
    return cosine_matrix(vecs, "embedding")
