"""Paths to the bundled mini corpus and its resources."""

from __future__ import annotations

import os
from dataclasses import dataclass

from .lexicon import bundled_path


@dataclass(frozen=True)
class MiniCorpus:
    docs: str
    gold: str
    lexicon: str
    vectors: str
    embeddings: str
    toy_taxonomy: str

    def doc_paths(self) -> list[str]:
        return sorted(os.path.join(self.docs, f) for f in os.listdir(self.docs) if f.endswith(".txt"))

    def read(self) -> tuple[dict[str, str], dict[str, str]]:
        """Document texts and gold summaries keyed by document id."""
        texts, gold = {}, {}
        for path in self.doc_paths():
            doc_id = os.path.splitext(os.path.basename(path))[0]
            with open(path, encoding="utf-8") as fh:
                texts[doc_id] = fh.read()
            with open(os.path.join(self.gold, doc_id + ".txt"), encoding="utf-8") as fh:
                gold[doc_id] = fh.read()
        return texts, gold


def mini_corpus() -> MiniCorpus:
    """The ten-document news corpus shipped with the package.

    Its lexicon, word vectors and sentence embeddings are small synthetic
    stand-ins built by ``tools/build_mini_resources.py``.
    """
    root = bundled_path("minicorpus")
    return MiniCorpus(
        docs=str(root / "docs"),
        gold=str(root / "gold"),
        lexicon=str(root / "mini.lex"),
        vectors=str(root / "mini_vectors.txt"),
        embeddings=str(root / "mini_embeddings.txt"),
        toy_taxonomy=str(bundled_path("toy_taxonomy.lex")),
    )
