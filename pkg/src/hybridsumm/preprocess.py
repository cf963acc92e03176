"""Sentence splitting, cleaning, tokenization, tagging and the frequency matrix."""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

import numpy as np
from nltk.stem.porter import PorterStemmer
from nltk.tokenize import TreebankWordTokenizer

from .exceptions import DataError
from .lexicon import ADJECTIVE, ADVERB, CONTENT_POS, NOUN, OTHER, VERB, Lexicon

DEFAULT_ABBREVIATIONS = ("Mr.", "Mrs.", "Dr.", "Prof.", "St.", "vs.", "etc.", "e.g.", "i.e.")

COUNT_FORMS = ("stem", "lemma", "surface")


@dataclass(frozen=True)
class Token:
    surface: str
    normalized: str
    stem: str = ""
    lemma: str = ""
    pos: str = NOUN
    is_stopword: bool = False

    @property
    def has_letter(self) -> bool:
        return any(c.isalpha() for c in self.normalized)

    @property
    def is_content(self) -> bool:
        """Eligible for the semantic models: a tagged non-stopword word."""
        return not self.is_stopword and self.pos in CONTENT_POS and self.has_letter

    def form(self, count_form: str) -> str:
        if count_form == "stem":
            return self.stem or self.normalized
        if count_form == "lemma":
            return self.lemma or self.normalized
        if count_form == "surface":
            return self.normalized
        raise ValueError(f"unknown count form {count_form!r}")


@dataclass(frozen=True)
class Sentence:
    index: int
    raw: str
    tokens: tuple[Token, ...] = ()

    def content_tokens(self) -> list[Token]:
        return [t for t in self.tokens if t.is_content]


@dataclass(frozen=True)
class Document:
    id: str
    sentences: tuple[Sentence, ...]
    vocabulary: tuple[str, ...] = field(default=())

    def __post_init__(self):
        for i, s in enumerate(self.sentences):
            if s.index != i:
                raise ValueError(f"sentence indices must be 0..n-1, got {s.index} at {i}")
        if not self.vocabulary:
            seen = dict.fromkeys(t.normalized for s in self.sentences for t in s.tokens)
            object.__setattr__(self, "vocabulary", tuple(seen))

    def __len__(self):
        return len(self.sentences)

    @property
    def texts(self) -> list[str]:
        return [s.raw for s in self.sentences]


# -- sentence splitting -------------------------------------------------------

_BOUNDARY = re.compile(r"[.?!]+[\"')\]]*(?=\s|$)")
_LAST_WORD = re.compile(r"\S+$")


def split_sentences(text: str, abbreviations: Iterable[str] = DEFAULT_ABBREVIATIONS) -> list[Sentence]:
    """Rule-based sentence splitter.

    A boundary is a run of ``.?!`` (plus closing quotes or brackets) followed
    by whitespace or the end of the text. No split happens after a listed
    abbreviation or when the next word starts with a lowercase letter.
    Whitespace inside a sentence is collapsed to single spaces.
    """
    abbrevs = {a.lower() for a in abbreviations}
    pieces = []
    start = 0
    for m in _BOUNDARY.finditer(text):
        end = m.end()
        rest = text[end:].lstrip()
        if rest:
            if rest[0].islower():
                continue
            if m.group() == ".":
                word = _LAST_WORD.search(text, 0, end).group()
                if word.lower() in abbrevs:
                    continue
        pieces.append(text[start:end])
        start = end
    pieces.append(text[start:])
    raws = [" ".join(p.split()) for p in pieces]
    return [Sentence(i, raw) for i, raw in enumerate(r for r in raws if r)]


# -- cleaning and tokenization ------------------------------------------------

def clean(text: str) -> str:
    """Replace every special character by one space.

    Letters, digits and whitespace are kept, as are apostrophes between two
    alphanumerics (``don't``). Output length equals input length.
    """
    text = text.replace("’", "'")
    out = []
    last = len(text) - 1
    for i, ch in enumerate(text):
        if ch.isalnum() or ch.isspace():
            out.append(ch)
        elif ch == "'" and 0 < i < last and text[i - 1].isalnum() and text[i + 1].isalnum():
            out.append(ch)
        else:
            out.append(" ")
    return "".join(out)


_treebank = TreebankWordTokenizer()


def tokenize_words(sentence_raw: str) -> list[Token]:
    return [Token(surface=w, normalized=w.lower()) for w in _treebank.tokenize(sentence_raw)]


# -- tagging, stemming, lemmatization ----------------------------------------

_SUFFIX_TAGS = (
    ("ing", VERB),
    ("ed", VERB),
    ("ly", ADVERB),
    ("ous", ADJECTIVE),
    ("ful", ADJECTIVE),
    ("ive", ADJECTIVE),
)


def guess_pos(word: str) -> str:
    """Suffix-rule tag for words the lexicon does not know."""
    if not any(c.isalpha() for c in word):
        return OTHER
    for suffix, tag in _SUFFIX_TAGS:
        if word.endswith(suffix) and len(word) - len(suffix) >= 2:
            return tag
    return NOUN


def lexicon_pos(word: str, lexicon: Lexicon) -> str | None:
    """POS of the earliest-listed synset reachable from ``word``, if any."""
    best = None
    for pos in (NOUN, VERB, ADJECTIVE, ADVERB):
        lemma = lemmatize(word, pos, lexicon)
        for sid in lexicon.lookup(lemma, pos)[:1]:
            rank = lexicon.file_rank(sid)
            if best is None or rank < best[0]:
                best = (rank, pos)
    return None if best is None else best[1]


def pos_tag(tokens: Sequence[Token], lexicon: Lexicon | None = None) -> list[Token]:
    tagged = []
    for tok in tokens:
        pos = lexicon_pos(tok.normalized, lexicon) if lexicon is not None else None
        tagged.append(replace(tok, pos=pos or guess_pos(tok.normalized)))
    return tagged


_stemmer = PorterStemmer(mode=PorterStemmer.ORIGINAL_ALGORITHM)


def stem(word: str) -> str:
    return _stemmer.stem(word)


_MORPHY_RULES = {
    NOUN: (("s", ""), ("ses", "s"), ("ves", "f"), ("xes", "x"), ("zes", "z"),
           ("ches", "ch"), ("shes", "sh"), ("men", "man"), ("ies", "y")),
    VERB: (("s", ""), ("ies", "y"), ("es", "e"), ("es", ""), ("ed", "e"),
           ("ed", ""), ("ing", "e"), ("ing", "")),
    ADJECTIVE: (("er", ""), ("est", ""), ("er", "e"), ("est", "e")),
    ADVERB: (),
}


def lemmatize(word: str, pos: str, lexicon: Lexicon | None) -> str:
    """Base form of ``word`` for ``pos``.

    The irregular-form table is tried first, then the word itself, then one
    suffix substitution per rule. The word is returned unchanged when no
    candidate is in the lexicon.
    """
    if lexicon is None or pos not in _MORPHY_RULES:
        return word
    exc = lexicon.exceptional_forms.get((word, pos))
    if exc is not None:
        return exc
    if lexicon.has_lemma(word, pos):
        return word
    for suffix, repl in _MORPHY_RULES[pos]:
        if word.endswith(suffix) and len(word) > len(suffix):
            candidate = word[: len(word) - len(suffix)] + repl
            if lexicon.has_lemma(candidate, pos):
                return candidate
    return word


# -- documents ----------------------------------------------------------------

def annotate(tokens: Sequence[Token], lexicon: Lexicon | None, stopwords: frozenset[str]) -> list[Token]:
    out = []
    for tok in pos_tag(tokens, lexicon):
        w = tok.normalized
        stemmed = stem(w) if w.isalpha() else w
        lemma = lemmatize(w, tok.pos, lexicon) if tok.pos in CONTENT_POS else w
        out.append(replace(tok, stem=stemmed or w, lemma=lemma or w, is_stopword=w in stopwords))
    return out


def preprocess_document(
    text: str,
    doc_id: str,
    lexicon: Lexicon | None = None,
    stopwords: Iterable[str] | None = None,
    abbreviations: Iterable[str] = DEFAULT_ABBREVIATIONS,
) -> Document:
    """Split, clean, tokenize and annotate ``text``."""
    if stopwords is None:
        from .lexicon import default_stopwords

        stopwords = default_stopwords()
    stopwords = frozenset(stopwords)
    sentences = []
    for s in split_sentences(text, abbreviations):
        toks = annotate(tokenize_words(clean(s.raw)), lexicon, stopwords)
        sentences.append(Sentence(s.index, s.raw, tuple(toks)))
    return Document(doc_id, tuple(sentences))


def gloss_terms(text: str, lexicon: Lexicon | None = None) -> list[str]:
    """Words of a gloss, plus their noun and verb base forms, minus stopwords."""
    from .lexicon import default_stopwords

    stops = default_stopwords()
    terms = []
    for tok in tokenize_words(clean(text)):
        w = tok.normalized
        if w in stops or not w.isalpha():
            continue
        terms.append(w)
        for pos in (NOUN, VERB):
            base = lemmatize(w, pos, lexicon)
            if base != w:
                terms.append(base)
    return terms


# -- frequency matrix ---------------------------------------------------------

@dataclass(frozen=True)
class FrequencyMatrix:
    words: tuple[str, ...]
    counts: np.ndarray

    @property
    def sentence_count(self) -> int:
        return self.counts.shape[0]

    @property
    def retained(self) -> int:
        return len(self.words)


def _countable(tok: Token, stopwords) -> bool:
    if not tok.has_letter:
        return False
    if stopwords is None:
        return not tok.is_stopword
    return tok.normalized not in stopwords


def build_frequency_matrix(
    docs: Sequence[Document],
    target: str | Document,
    stopwords: Iterable[str] | None = None,
    low_df: float = 0.002,
    high_df: float = 0.15,
    min_corpus_size: int = 20,
    count_form: str = "stem",
) -> FrequencyMatrix:
    """Sentence-by-word counts for ``target`` after stopword and df filtering.

    Document frequencies are fractions of ``docs``. The df filter is skipped
    when fewer than ``min_corpus_size`` documents are supplied. Without an
    explicit ``stopwords`` set the tokens' own stopword flags are used.
    """
    if not 0 <= low_df < high_df <= 1:
        raise ValueError("need 0 <= low_df < high_df <= 1")
    target_id = target.id if isinstance(target, Document) else target
    doc = next((d for d in docs if d.id == target_id), None)
    if doc is None:
        raise DataError(f"unknown target document {target_id!r}")
    stops = frozenset(stopwords) if stopwords is not None else None

    def terms(sentence):
        return [t.form(count_form) for t in sentence.tokens if _countable(t, stops)]

    words = list(dict.fromkeys(w for s in doc.sentences for w in terms(s)))
    if len(docs) >= min_corpus_size:
        df = dict.fromkeys(words, 0)
        for d in docs:
            present = {w for s in d.sentences for w in terms(s)}
            for w in present & df.keys():
                df[w] += 1
        total = len(docs)
        words = [w for w in words if low_df <= df[w] / total <= high_df]

    column = {w: j for j, w in enumerate(words)}
    counts = np.zeros((len(doc.sentences), len(words)), dtype=np.int64)
    for i, s in enumerate(doc.sentences):
        for w in terms(s):
            j = column.get(w)
            if j is not None:
                counts[i, j] += 1
    return FrequencyMatrix(tuple(words), counts)
