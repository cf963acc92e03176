"""Loading and serving of the external lexical resources.

Three plain-text formats are supported:

* lexicon files, one record per line::

      SYN <id> <pos> lemmas=<l1,l2> hyper=<id1,id2> gloss="..." ex="...|..."
      EXC <pos> <surface> <lemma>

  ``#`` starts a comment line. ``<pos>`` is one of ``n v a r`` (``s`` is read
  as an adjective) or a full tag name.
* word vector tables in the GloVe text layout, ``<word> <v1> ... <vd>``.
* sentence embedding sidecars: a ``DIM <d>`` header, then
  ``<doc-id> <sentence-index> <v1> ... <vd>`` rows.

All loaded structures are treated as immutable.
"""

from __future__ import annotations

import io
import os
import shlex
from dataclasses import dataclass, field
from importlib import resources
from types import MappingProxyType
from typing import Iterable, Mapping

import numpy as np

from .exceptions import FormatError

NOUN = "noun"
VERB = "verb"
ADJECTIVE = "adjective"
ADVERB = "adverb"
OTHER = "other"

POS_TAGS = (NOUN, VERB, ADJECTIVE, ADVERB, OTHER)
CONTENT_POS = frozenset({NOUN, VERB, ADJECTIVE, ADVERB})

_POS_FROM_FILE = {
    "n": NOUN,
    "v": VERB,
    "a": ADJECTIVE,
    "s": ADJECTIVE,
    "r": ADVERB,
    NOUN: NOUN,
    VERB: VERB,
    ADJECTIVE: ADJECTIVE,
    ADVERB: ADVERB,
}
_POS_TO_FILE = {NOUN: "n", VERB: "v", ADJECTIVE: "a", ADVERB: "r"}


def parse_pos(tag: str) -> str:
    try:
        return _POS_FROM_FILE[tag.lower()]
    except KeyError:
        raise ValueError(f"unknown part-of-speech tag {tag!r}") from None


@dataclass(frozen=True)
class Synset:
    id: str
    pos: str
    lemmas: tuple[str, ...]
    gloss: str = ""
    examples: tuple[str, ...] = ()


class Lexicon:
    """A WordNet-style synset database with an is-a hierarchy.

    Parameters
    ----------
    synsets : iterable of Synset
        In file order. The order of synsets under each ``(lemma, pos)`` key
        is the sense-frequency order (most frequent first).
    hypernyms : mapping of synset id to iterable of synset ids
    exceptional_forms : mapping of ``(surface, pos)`` to lemma
    """

    def __init__(
        self,
        synsets: Iterable[Synset],
        hypernyms: Mapping[str, Iterable[str]] | None = None,
        exceptional_forms: Mapping[tuple[str, str], str] | None = None,
    ):
        table: dict[str, Synset] = {}
        index: dict[tuple[str, str], list[str]] = {}
        for syn in synsets:
            if syn.id in table:
                raise ValueError(f"duplicate synset id {syn.id!r}")
            if not syn.lemmas:
                raise ValueError(f"synset {syn.id!r} has no lemmas")
            if syn.pos not in CONTENT_POS:
                raise ValueError(f"synset {syn.id!r} has invalid pos {syn.pos!r}")
            table[syn.id] = syn
            for lemma in syn.lemmas:
                ids = index.setdefault((lemma.lower(), syn.pos), [])
                if syn.id not in ids:
                    ids.append(syn.id)

        hyper: dict[str, tuple[str, ...]] = {}
        for sid, targets in (hypernyms or {}).items():
            targets = tuple(targets)
            if sid not in table:
                raise ValueError(f"hypernym source {sid!r} is not a known synset")
            for t in targets:
                if t not in table:
                    raise ValueError(f"synset {sid!r} lists unknown hypernym {t!r}")
            if targets:
                hyper[sid] = targets
        _check_acyclic(hyper)

        self._synsets = MappingProxyType(table)
        self._index = MappingProxyType({k: tuple(v) for k, v in index.items()})
        self._hypernyms = MappingProxyType(hyper)
        self._exceptions = MappingProxyType(dict(exceptional_forms or {}))
        self._rank = {sid: i for i, sid in enumerate(table)}
        self._adjacency: dict[str, tuple[str, ...]] | None = None
        self._gloss_bags: dict[str, frozenset[str]] = {}

    @property
    def synsets(self) -> Mapping[str, Synset]:
        return self._synsets

    @property
    def index(self) -> Mapping[tuple[str, str], tuple[str, ...]]:
        return self._index

    @property
    def hypernyms(self) -> Mapping[str, tuple[str, ...]]:
        return self._hypernyms

    @property
    def exceptional_forms(self) -> Mapping[tuple[str, str], str]:
        return self._exceptions

    def __eq__(self, other):
        if not isinstance(other, Lexicon):
            return NotImplemented
        return (
            list(self._synsets.items()) == list(other._synsets.items())
            and dict(self._hypernyms) == dict(other._hypernyms)
            and dict(self._exceptions) == dict(other._exceptions)
        )

    def __repr__(self):
        return (
            f"Lexicon({len(self._synsets)} synsets, "
            f"{self.edge_count()} hypernym edges, {len(self._exceptions)} exceptions)"
        )

    def edge_count(self) -> int:
        return sum(len(v) for v in self._hypernyms.values())

    def lookup(self, lemma: str, pos: str) -> tuple[str, ...]:
        """Synset ids for ``(lemma, pos)``, most frequent first; empty if unknown."""
        return self._index.get((lemma.lower(), pos), ())

    def has_lemma(self, lemma: str, pos: str) -> bool:
        return (lemma.lower(), pos) in self._index

    def file_rank(self, synset_id: str) -> int:
        return self._rank[synset_id]

    def neighbors(self, synset_id: str) -> tuple[str, ...]:
        """Synsets one is-a edge away, in either direction."""
        if self._adjacency is None:
            adj: dict[str, list[str]] = {sid: [] for sid in self._synsets}
            for src, targets in self._hypernyms.items():
                for t in targets:
                    adj[src].append(t)
                    adj[t].append(src)
            self._adjacency = {k: tuple(v) for k, v in adj.items()}
        return self._adjacency[synset_id]

    def gloss_bag(self, synset_id: str) -> frozenset[str]:
        """Lowercased word bag of a synset's gloss and examples (cached)."""
        bag = self._gloss_bags.get(synset_id)
        if bag is None:
            syn = self._synsets[synset_id]
            # local import: preprocess depends on this module
            from .preprocess import gloss_terms

            bag = frozenset(gloss_terms(" ".join((syn.gloss, *syn.examples)), self))
            self._gloss_bags[synset_id] = bag
        return bag

    def to_text(self) -> str:
        out = io.StringIO()
        for syn in self._synsets.values():
            for ex in syn.examples:
                if "|" in ex:
                    raise ValueError(f"example of {syn.id!r} contains '|'")
            fields = [
                "SYN",
                syn.id,
                _POS_TO_FILE[syn.pos],
                "lemmas=" + ",".join(syn.lemmas),
                "hyper=" + ",".join(self._hypernyms.get(syn.id, ())),
                "gloss=" + _quote(syn.gloss),
                "ex=" + _quote("|".join(syn.examples)),
            ]
            out.write(" ".join(fields) + "\n")
        for (surface, pos), lemma in self._exceptions.items():
            out.write(f"EXC {_POS_TO_FILE[pos]} {surface} {lemma}\n")
        return out.getvalue()


def _quote(text: str) -> str:
    text = text.replace("\n", " ").replace("\\", "\\\\").replace('"', '\\"')
    return f'"{text}"'


def _check_acyclic(hypernyms: Mapping[str, tuple[str, ...]]) -> None:
    WHITE, GREY, BLACK = 0, 1, 2
    color: dict[str, int] = {}
    for root in hypernyms:
        if color.get(root, WHITE) != WHITE:
            continue
        stack = [(root, iter(hypernyms.get(root, ())))]
        color[root] = GREY
        while stack:
            node, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[node] = BLACK
                stack.pop()
                continue
            state = color.get(nxt, WHITE)
            if state == GREY:
                raise ValueError(f"hypernym cycle through {nxt!r}")
            if state == WHITE:
                color[nxt] = GREY
                stack.append((nxt, iter(hypernyms.get(nxt, ()))))


def parse_lexicon(text: str, path=None) -> Lexicon:
    synsets: list[Synset] = []
    hypernyms: dict[str, tuple[str, ...]] = {}
    exceptions: dict[tuple[str, str], str] = {}
    origin: dict[str, int] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            parts = shlex.split(line, posix=True)
        except ValueError as exc:
            raise FormatError(f"unparsable record ({exc})", path, lineno) from None
        kind = parts[0]
        if kind == "SYN":
            if len(parts) < 3:
                raise FormatError("SYN record needs an id and a pos", path, lineno)
            sid = parts[1]
            try:
                pos = parse_pos(parts[2])
            except ValueError as exc:
                raise FormatError(str(exc), path, lineno) from None
            attrs = {}
            for item in parts[3:]:
                key, sep, value = item.partition("=")
                if not sep or key not in ("lemmas", "hyper", "gloss", "ex"):
                    raise FormatError(f"unexpected field {item!r}", path, lineno)
                if key in attrs:
                    raise FormatError(f"repeated field {key!r}", path, lineno)
                attrs[key] = value
            lemmas = tuple(x for x in attrs.get("lemmas", "").split(",") if x)
            if not lemmas:
                raise FormatError(f"synset {sid!r} has no lemmas", path, lineno)
            if sid in origin:
                raise FormatError(f"duplicate synset id {sid!r}", path, lineno)
            origin[sid] = lineno
            ex = attrs.get("ex", "")
            synsets.append(
                Synset(
                    id=sid,
                    pos=pos,
                    lemmas=lemmas,
                    gloss=attrs.get("gloss", ""),
                    examples=tuple(ex.split("|")) if ex else (),
                )
            )
            hyper = tuple(x for x in attrs.get("hyper", "").split(",") if x)
            if hyper:
                hypernyms[sid] = hyper
        elif kind == "EXC":
            if len(parts) != 4:
                raise FormatError("EXC record needs <pos> <surface> <lemma>", path, lineno)
            try:
                pos = parse_pos(parts[1])
            except ValueError as exc:
                raise FormatError(str(exc), path, lineno) from None
            exceptions[(parts[2].lower(), pos)] = parts[3].lower()
        else:
            raise FormatError(f"unknown record type {kind!r}", path, lineno)

    for sid, targets in hypernyms.items():
        for t in targets:
            if t not in origin:
                raise FormatError(
                    f"synset {sid!r} lists unknown hypernym {t!r}", path, origin[sid]
                )
    try:
        return Lexicon(synsets, hypernyms, exceptions)
    except ValueError as exc:
        raise FormatError(str(exc), path) from None


def load_lexicon(path) -> Lexicon:
    """Read a lexicon file (see module docstring for the format)."""
    with open(path, encoding="utf-8") as fh:
        return parse_lexicon(fh.read(), path=os.fspath(path))


def dump_lexicon(lexicon: Lexicon, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(lexicon.to_text())


@dataclass(frozen=True)
class WordVectorTable:
    dim: int
    vectors: Mapping[str, np.ndarray] = field(repr=False)

    def __post_init__(self):
        if self.dim <= 0:
            raise ValueError("dim must be positive")
        for word, vec in self.vectors.items():
            if vec.shape != (self.dim,):
                raise ValueError(f"vector for {word!r} has shape {vec.shape}")

    def __contains__(self, word):
        return word in self.vectors

    def __len__(self):
        return len(self.vectors)

    def get(self, word):
        return self.vectors.get(word)

    def __eq__(self, other):
        if not isinstance(other, WordVectorTable):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.vectors.keys() == other.vectors.keys()
            and all(np.array_equal(v, other.vectors[k]) for k, v in self.vectors.items())
        )


def _frozen(values) -> np.ndarray:
    arr = np.asarray(values, dtype=np.float64)
    arr.flags.writeable = False
    return arr


def load_vectors(path, expected_dim: int | None = None) -> WordVectorTable:
    """Read a GloVe-style text vector file.

    When ``expected_dim`` is None the dimension is taken from the first row.
    Later rows for a repeated word replace earlier ones.
    """
    vectors: dict[str, np.ndarray] = {}
    dim = expected_dim
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            parts = line.split()
            if not parts:
                continue
            word, values = parts[0], parts[1:]
            if dim is None:
                dim = len(values)
                if dim == 0:
                    raise FormatError("row has no vector values", path, lineno)
            if len(values) != dim:
                raise FormatError(
                    f"expected {dim} values for {word!r}, found {len(values)}", path, lineno
                )
            try:
                vectors[word] = _frozen([float(v) for v in values])
            except ValueError:
                raise FormatError(f"unparsable number in row for {word!r}", path, lineno) from None
    if dim is None:
        raise FormatError("vector file is empty", path)
    return WordVectorTable(dim, MappingProxyType(vectors))


def dump_vectors(table: WordVectorTable, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for word, vec in table.vectors.items():
            fh.write(word + " " + " ".join(repr(float(x)) for x in vec) + "\n")


@dataclass(frozen=True)
class SentenceEmbeddingStore:
    dim: int
    vectors: Mapping[tuple[str, int], np.ndarray] = field(repr=False)

    def get(self, doc_id: str, index: int):
        return self.vectors.get((doc_id, index))

    def __contains__(self, key):
        return key in self.vectors

    def __len__(self):
        return len(self.vectors)


def load_sentence_embeddings(path) -> SentenceEmbeddingStore:
    dim = None
    vectors: dict[tuple[str, int], np.ndarray] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            parts = line.split()
            if not parts or parts[0].startswith("#"):
                continue
            if dim is None:
                if parts[0] != "DIM" or len(parts) != 2:
                    raise FormatError("missing 'DIM <d>' header", path, lineno)
                try:
                    dim = int(parts[1])
                except ValueError:
                    raise FormatError(f"bad dimension {parts[1]!r}", path, lineno) from None
                if dim <= 0:
                    raise FormatError("dimension must be positive", path, lineno)
                continue
            if len(parts) < 2:
                raise FormatError("row needs <doc-id> <sentence-index>", path, lineno)
            doc_id = parts[0]
            try:
                index = int(parts[1])
            except ValueError:
                raise FormatError(f"bad sentence index {parts[1]!r}", path, lineno) from None
            values = parts[2:]
            if len(values) != dim:
                raise FormatError(
                    f"row ({doc_id}, {index}) has {len(values)} values, expected {dim}",
                    path,
                    lineno,
                )
            if (doc_id, index) in vectors:
                raise FormatError(f"duplicate key ({doc_id}, {index})", path, lineno)
            try:
                vectors[(doc_id, index)] = _frozen([float(v) for v in values])
            except ValueError:
                raise FormatError(
                    f"unparsable number in row ({doc_id}, {index})", path, lineno
                ) from None
    if dim is None:
        raise FormatError("missing 'DIM <d>' header", path)
    return SentenceEmbeddingStore(dim, MappingProxyType(vectors))


def dump_sentence_embeddings(store: SentenceEmbeddingStore, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"DIM {store.dim}\n")
        for (doc_id, index), vec in store.vectors.items():
            fh.write(f"{doc_id} {index} " + " ".join(repr(float(x)) for x in vec) + "\n")


def load_stopwords(path) -> frozenset[str]:
    with open(path, encoding="utf-8") as fh:
        return frozenset(w.strip().lower() for w in fh if w.strip() and not w.startswith("#"))


def default_stopwords() -> frozenset[str]:
    """The bundled English stopword list."""
    text = resources.files("hybridsumm.data").joinpath("stopwords.txt").read_text("utf-8")
    return frozenset(w.strip() for w in text.splitlines() if w.strip() and not w.startswith("#"))


def bundled_path(*parts: str):
    """Filesystem path of a file shipped in ``hybridsumm/data``."""
    return resources.files("hybridsumm.data").joinpath(*parts)

