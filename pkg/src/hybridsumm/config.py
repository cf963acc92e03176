"""Pipeline configuration: defaults, TOML config files and validation."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from typing import Any, Mapping

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from .exceptions import ResourceError
from .preprocess import COUNT_FORMS, DEFAULT_ABBREVIATIONS
from .ranking import Budget
from .semmodels import TOKEN_FILTERS
from .statmodels import POSITION_MODES

MODELS = ("jaccard", "cosine", "textrank", "tfidf", "wordnet", "glove", "embedding")
SIMILARITY_MODELS = ("jaccard", "cosine", "wordnet", "glove", "embedding")
RANK_STRATEGIES = ("rscore", "hcluster")
F1_GRANULARITIES = ("bigram", "unigram", "sentence")

# Single-letter model groups accepted by --models.
TABLE_COLUMNS = {
    "A": ("jaccard", "cosine"),
    "B": ("textrank",),
    "C": ("tfidf",),
    "D": ("wordnet",),
    "E": ("glove",),
    "F": ("embedding",),
}

REQUIRED_RESOURCE = {"wordnet": "lexicon", "glove": "vectors", "embedding": "embeddings"}

ENV_CONFIG = "HYBRIDSUMM_CONFIG"

# config-file key -> PipelineConfig attribute
KEY_MAP = {
    "models": "models",
    "rank": "rank",
    "k": "k",
    "chars": "chars",
    "words": "words",
    "lexicon": "lexicon",
    "vectors": "vectors",
    "embeddings": "embeddings",
    "stopwords": "stopwords",
    "profiles": "profiles",
    "jobs": "jobs",
    "low_df": "low_df",
    "high_df": "high_df",
    "min_corpus_size": "min_corpus_size",
    "abbreviations": "abbreviations",
    "count_form": "count_form",
    "textrank.d": "textrank_d",
    "textrank.epsilon": "textrank_epsilon",
    "textrank.max_iter": "textrank_max_iter",
    "tfidf.position": "tfidf_position",
    "cosine.mode": "cosine_mode",
    "wordnet.threshold": "wordnet_threshold",
    "dice_classic": "dice_classic",
    "semantic.token_filter": "token_filter",
    "ensemble.normalize": "normalize_weights",
    "ensemble.f1": "f1_granularity",
    "rouge.n": "rouge_n",
    "rouge.stem": "rouge_stem",
}


@dataclass(frozen=True)
class PipelineConfig:
    models: tuple[str, ...] = ("jaccard", "textrank", "tfidf")
    rank: str = "rscore"
    k: int | None = None
    chars: int | None = None
    words: int | None = None
    lexicon: str | None = None
    vectors: str | None = None
    embeddings: str | None = None
    stopwords: str | None = None
    profiles: str | None = None
    jobs: int = 1
    low_df: float = 0.002
    high_df: float = 0.15
    min_corpus_size: int = 20
    abbreviations: tuple[str, ...] = DEFAULT_ABBREVIATIONS
    count_form: str = "stem"
    textrank_d: float = 0.85
    textrank_epsilon: float = 1e-6
    textrank_max_iter: int = 200
    tfidf_position: str = "linear"
    cosine_mode: str = "similarity"
    wordnet_threshold: float = 0.5
    dice_classic: bool = False
    token_filter: str = "content"
    normalize_weights: bool = True
    f1_granularity: str = "bigram"
    rouge_n: int = 2
    rouge_stem: bool = False

    def __post_init__(self):
        models = self.models
        if isinstance(models, str):
            models = parse_models(models)
        object.__setattr__(self, "models", tuple(models))
        object.__setattr__(self, "abbreviations", tuple(self.abbreviations))
        self.check()

    def check(self) -> None:
        if not self.models:
            raise ValueError("model set must not be empty")
        for m in self.models:
            if m not in MODELS:
                raise ValueError(f"unknown model {m!r}; choose from {', '.join(MODELS)}")
        if len(set(self.models)) != len(self.models):
            raise ValueError("model set contains duplicates")
        _choice("rank", self.rank, RANK_STRATEGIES)
        _choice("count_form", self.count_form, COUNT_FORMS)
        _choice("tfidf.position", self.tfidf_position, POSITION_MODES)
        _choice("cosine.mode", self.cosine_mode, ("similarity", "distance"))
        _choice("semantic.token_filter", self.token_filter, TOKEN_FILTERS)
        _choice("ensemble.f1", self.f1_granularity, F1_GRANULARITIES)
        if sum(x is not None for x in (self.k, self.chars, self.words)) > 1:
            raise ValueError("choose at most one of k, chars, words")
        for name in ("k", "chars", "words"):
            val = getattr(self, name)
            if val is not None and val <= 0:
                raise ValueError(f"{name} must be positive")
        if not 0 <= self.low_df < self.high_df <= 1:
            raise ValueError("need 0 <= low_df < high_df <= 1")
        if not 0 < self.textrank_d < 1:
            raise ValueError("textrank.d must lie in (0, 1)")
        if self.textrank_epsilon <= 0 or self.textrank_max_iter <= 0:
            raise ValueError("textrank.epsilon and textrank.max_iter must be positive")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")
        if self.rouge_n < 1:
            raise ValueError("rouge.n must be >= 1")

    @property
    def budget(self) -> Budget:
        if self.k is not None:
            return Budget.sentences(self.k)
        if self.words is not None:
            return Budget.words(self.words)
        return Budget.chars(self.chars if self.chars is not None else 665)

    def with_budget(self, *, k=None, chars=None, words=None) -> PipelineConfig:
        if k is None and chars is None and words is None:
            return self
        return replace(self, k=k, chars=chars, words=words)

    def update(self, values: Mapping[str, Any]) -> PipelineConfig:
        """New config with ``values`` (config-file keys) applied."""
        attrs = {}
        for key, val in values.items():
            if key not in KEY_MAP:
                raise ValueError(f"unknown config key {key!r}")
            attrs[KEY_MAP[key]] = _coerce(KEY_MAP[key], val)
        if {"k", "chars", "words"} & attrs.keys():
            for name in ("k", "chars", "words"):
                attrs.setdefault(name, None)
        return replace(self, **attrs)

    def check_resources(self) -> None:
        """Raise ResourceError when a selected model lacks its resource path."""
        for model in self.models:
            attr = REQUIRED_RESOURCE.get(model)
            if attr is None:
                continue
            path = getattr(self, attr)
            if path is None:
                raise ResourceError(f"model {model!r} needs --{attr}")
            if not os.path.exists(path):
                raise ResourceError(f"{attr} file not found: {path}")
        for attr in ("stopwords", "profiles"):
            path = getattr(self, attr)
            if path is not None and not os.path.exists(path):
                raise ResourceError(f"{attr} file not found: {path}")


def _choice(name, value, options):
    if value not in options:
        raise ValueError(f"{name} must be one of {', '.join(options)}; got {value!r}")


_FIELD_TYPES = {f.name: f.type for f in fields(PipelineConfig)}


def _coerce(attr: str, value):
    kind = _FIELD_TYPES[attr]
    if attr == "models":
        return parse_models(value) if isinstance(value, str) else tuple(value)
    if attr == "abbreviations":
        return tuple(value.split(",")) if isinstance(value, str) else tuple(value)
    if value is None:
        return None
    if kind == "bool":
        if isinstance(value, str):
            if value.lower() in ("1", "true", "yes", "on"):
                return True
            if value.lower() in ("0", "false", "no", "off"):
                return False
            raise ValueError(f"{attr} expects a boolean, got {value!r}")
        return bool(value)
    if kind.startswith("int"):
        return int(value)
    if kind.startswith("float"):
        return float(value)
    return str(value)


def parse_models(spec: str) -> tuple[str, ...]:
    """Parse ``"jaccard,textrank"`` (or group letters such as ``"A,B,F"``)."""
    out: list[str] = []
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        expanded = TABLE_COLUMNS.get(part, (part.lower(),))
        for m in expanded:
            if m not in out:
                out.append(m)
    return tuple(out)


def _flatten(table: Mapping[str, Any], prefix: str = "") -> dict[str, Any]:
    flat = {}
    for key, val in table.items():
        name = f"{prefix}{key}"
        if isinstance(val, dict):
            flat.update(_flatten(val, name + "."))
        else:
            flat[name] = val
    return flat


def load_config(path, base: PipelineConfig | None = None) -> PipelineConfig:
    """Read a TOML config file; dotted keys and tables are both accepted.

    Relative resource paths are resolved against the config file's directory.
    """
    with open(path, "rb") as fh:
        flat = _flatten(tomllib.load(fh))
    root = os.path.dirname(os.path.abspath(path))
    for key in ("lexicon", "vectors", "embeddings", "stopwords", "profiles"):
        if isinstance(flat.get(key), str) and not os.path.isabs(flat[key]):
            flat[key] = os.path.join(root, flat[key])
    return (base or PipelineConfig()).update(flat)
