"""Command-line interface: summarize, train, eval, inspect."""

from __future__ import annotations

import argparse
import glob
import json
import os
import sys
import warnings
from typing import Sequence

import numpy as np

from .config import ENV_CONFIG, PipelineConfig, load_config, parse_models
from .ensemble import (
    CorpusProfile,
    TrainingExample,
    TrainingReport,
    load_profiles,
    save_profiles,
)
from .evaluate import rouge_n
from .exceptions import DataError, FormatError, ResourceError
from .pipeline import Pipeline, Resources, read_documents

EXIT_USAGE, EXIT_RESOURCE, EXIT_DATA = 1, 2, 3

DUMP_ALIASES = {
    "sim1": "jaccard",
    "sim2": "cosine",
    "sim3": "wordnet",
    "sim4": "glove",
    "sim5": "embedding",
}
DUMP_NAMES = ("jaccard", "cosine", "wordnet", "glove", "embedding", "textrank", "tfidf", "freq")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _shared(inspect: bool = False) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("pipeline")
    g.add_argument("--config", help=f"TOML config file (default: ${ENV_CONFIG})")
    g.add_argument("--models", help="comma-separated models or group letters A-F")
    g.add_argument("--rank", choices=("rscore", "hcluster"))
    budget = g.add_mutually_exclusive_group()
    budget.add_argument("--k", type=int, help="summary length in sentences")
    budget.add_argument("--chars", type=int, help="summary length in characters (default 665)")
    budget.add_argument("--words", type=int, help="summary length in words")
    g.add_argument("--lexicon", help="lexicon file (wordnet model)")
    g.add_argument("--vectors", help="word-vector file (glove model, profiles)")
    g.add_argument("--embeddings", help="sentence-embedding sidecar (embedding model)")
    g.add_argument("--stopwords", help="stopword list, one word per line")
    g.add_argument("--profiles", help="corpus profile JSON for weight lookup")
    g.add_argument("--jobs", type=int, help="documents processed in parallel")
    g.add_argument("--set", action="append", default=[], metavar="KEY=VALUE",
                   help="override any config key, e.g. textrank.d=0.9")
    if inspect:
        g.add_argument("--dump", action="append", default=[],
                       help="what to print: sim1..sim5, jaccard, cosine, wordnet, glove, embedding, textrank, tfidf, freq")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hybridsumm", description="Hybrid extractive summarizer.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("summarize", parents=[_shared()], help="summarize documents")
    p.add_argument("inputs", nargs="+", help="text files or directories of .txt files")
    p.add_argument("--out", help="directory for <doc-id>.txt summaries (default: stdout)")
    p.add_argument("--json", help="also write indices and weights to this JSON file")

    p = sub.add_parser("train", parents=[_shared()], help="train model weights from gold summaries")
    p.add_argument("corpus", help="directory of training documents")
    p.add_argument("gold", help="directory of gold summaries, paired by file name")
    p.add_argument("--out", required=True, help="profile JSON to write")
    p.add_argument("--corpus-id", help="profile name (default: corpus directory name)")
    p.add_argument("--append", action="store_true", help="add to the profiles already in --out")
    p.add_argument("--no-normalize", action="store_true", help="keep raw mean F1 as weights")

    p = sub.add_parser("eval", help="ROUGE-N of candidate summaries against references")
    p.add_argument("candidates", help="directory of candidate summaries")
    p.add_argument("references", help="directory of references: <id>.txt or <id>/*.txt")
    p.add_argument("--n", type=int, default=2, help="n-gram order (default 2)")
    p.add_argument("--rouge-stem", action="store_true", help="Porter-stem tokens first")

    p = sub.add_parser("inspect", parents=[_shared(inspect=True)], help="print matrices and scores as TSV")
    p.add_argument("inputs", nargs="+", help="text files or directories of .txt files")
    return parser


# -- helpers ------------------------------------------------------------------

def _txt_files(path: str) -> list[str]:
    if os.path.isdir(path):
        return sorted(glob.glob(os.path.join(path, "*.txt")))
    return [path]


def _input_files(inputs: Sequence[str]) -> list[str]:
    files = []
    for path in inputs:
        if not os.path.exists(path):
            raise DataError(f"input not found: {path}")
        files.extend(_txt_files(path))
    if not files:
        raise DataError("no input documents")
    return files


def _read_inputs(inputs) -> dict[str, str]:
    try:
        return read_documents(_input_files(inputs))
    except (OSError, UnicodeDecodeError) as exc:
        raise DataError(f"cannot read input: {exc}") from None


def make_config(args) -> PipelineConfig:
    try:
        path = args.config or os.environ.get(ENV_CONFIG)
        if path and not os.path.exists(path):
            raise ResourceError(f"config file not found: {path}")
        cfg = load_config(path) if path else PipelineConfig()
        flags = {}
        if args.models:
            flags["models"] = parse_models(args.models)
        for name in ("rank", "lexicon", "vectors", "embeddings", "stopwords", "profiles", "jobs"):
            val = getattr(args, name, None)
            if val is not None:
                flags[name] = val
        for name in ("k", "chars", "words"):
            if getattr(args, name) is not None:
                flags[name] = getattr(args, name)
        for item in args.set:
            key, sep, val = item.partition("=")
            if not sep:
                raise ValueError(f"--set expects KEY=VALUE, got {item!r}")
            flags[key.strip()] = val.strip()
        return cfg.update(flags)
    except (ValueError, TypeError) as exc:
        if isinstance(exc, (DataError, FormatError)):
            raise
        raise UsageError(str(exc)) from None


def _load_resources(cfg: PipelineConfig) -> Resources:
    try:
        return Resources.load(cfg)
    except FormatError as exc:
        raise ResourceError(str(exc)) from None
    except OSError as exc:
        raise ResourceError(f"cannot read resource: {exc}") from None


def _fmt(x) -> str:
    return repr(float(x))


def _emit_warnings(caught, stream) -> None:
    for w in caught:
        print(f"warning: {w.message}", file=stream)


# -- commands -----------------------------------------------------------------

def cmd_summarize(args, out=sys.stdout, err=sys.stderr) -> int:
    cfg = make_config(args)
    res = _load_resources(cfg)
    pipe = Pipeline(cfg, res)
    docs = pipe.add_documents(_read_inputs(args.inputs))
    summaries = pipe.summarize_all(docs)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
    records = []
    for doc, summ in zip(docs, summaries):
        if summ.warning:
            print(f"warning: {doc.id}: {summ.warning}", file=err)
        if args.out:
            with open(os.path.join(args.out, f"{doc.id}.txt"), "w", encoding="utf-8") as fh:
                fh.write(summ.to_lines())
        else:
            out.write(f"# {doc.id}\n{summ.to_lines()}\n")
        weights = pipe.weights_for(doc)
        records.append({
            "doc": doc.id,
            "indices": list(summ.indices),
            "sentences": list(summ.sentences),
            "weights": weights.weights,
            "provenance": weights.provenance,
            "warning": summ.warning,
        })
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(records, fh, indent=2)
            fh.write("\n")
    return 0


def _pair_dirs(left: str, right: str, err) -> list[tuple[str, str, list[str]]]:
    """(id, left file, right files) for ids present in both directories."""
    for d in (left, right):
        if not os.path.isdir(d):
            raise DataError(f"not a directory: {d}")
    lhs = {os.path.splitext(os.path.basename(f))[0]: f for f in _txt_files(left)}
    rhs: dict[str, list[str]] = {}
    for f in _txt_files(right):
        rhs[os.path.splitext(os.path.basename(f))[0]] = [f]
    for entry in sorted(os.listdir(right)):
        sub = os.path.join(right, entry)
        if os.path.isdir(sub):
            files = _txt_files(sub)
            if files:
                rhs.setdefault(entry, []).extend(files)
    for name in sorted(lhs.keys() - rhs.keys()):
        print(f"warning: {name}: no match in {right}, skipped", file=err)
    for name in sorted(rhs.keys() - lhs.keys()):
        print(f"warning: {name}: no match in {left}, skipped", file=err)
    return [(k, lhs[k], rhs[k]) for k in sorted(lhs.keys() & rhs.keys())]


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise DataError(f"cannot read {path}: {exc}") from None


def cmd_train(args, out=sys.stdout, err=sys.stderr) -> int:
    cfg = make_config(args)
    if args.no_normalize:
        cfg = cfg.update({"ensemble.normalize": False})
    if cfg.vectors is None:
        raise ResourceError("train needs --vectors to build the corpus vector")
    res = _load_resources(cfg)
    pairs = _pair_dirs(args.corpus, args.gold, err)
    if not pairs:
        raise DataError("no document has a gold summary")
    pipe = Pipeline(cfg, res)
    docs = pipe.add_documents({k: _read(doc) for k, doc, _ in pairs})
    examples = []
    for doc, (_, _, golds) in zip(docs, pairs):
        gold = " ".join(_read(g).strip() for g in golds).strip()
        if not gold or not len(doc.sentences):
            print(f"warning: {doc.id}: empty document or gold summary, skipped", file=err)
            continue
        examples.append(TrainingExample(doc, gold))
    if not examples:
        raise DataError("no usable training pairs")
    report = TrainingReport({})
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        weights = pipe.train(examples, report)
        corpus_id = args.corpus_id or os.path.basename(os.path.normpath(args.corpus))
        profile = pipe.profile(corpus_id, [ex.document for ex in examples], weights)
    _emit_warnings(caught, err)
    profiles: list[CorpusProfile] = []
    if args.append and os.path.exists(args.out):
        profiles = [p for p in load_profiles(args.out) if p.corpus_id != corpus_id]
    profiles.append(profile)
    save_profiles(profiles, args.out)
    out.write("model\tmean_f1\tweight\n")
    for m in weights.models:
        out.write(f"{m}\t{report.mean_f1[m]:.6f}\t{weights[m]:.6f}\n")
    return 0


def cmd_eval(args, out=sys.stdout, err=sys.stderr) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    pairs = _pair_dirs(args.candidates, args.references, err)
    if not pairs:
        raise DataError("no candidate has a reference")
    out.write(f"doc\trouge{args.n}_recall\tprecision\tf1\n")
    rows = []
    for name, cand, refs in pairs:
        score = rouge_n(_read(cand), [_read(r) for r in refs], args.n, args.rouge_stem)
        rows.append((score.recall, score.precision, score.f1))
        out.write(f"{name}\t{score.recall:.6f}\t{score.precision:.6f}\t{score.f1:.6f}\n")
    mean = np.mean(np.array(rows), axis=0)
    out.write(f"mean\t{mean[0]:.6f}\t{mean[1]:.6f}\t{mean[2]:.6f}\n")
    return 0


def _dump_targets(args) -> list[str]:
    names = []
    for item in args.dump or ["sim2", "textrank"]:
        for part in item.split(","):
            part = part.strip().lower()
            if not part:
                continue
            name = DUMP_ALIASES.get(part, part)
            if name not in DUMP_NAMES:
                raise UsageError(f"unknown --dump target {part!r}")
            if name not in names:
                names.append(name)
    return names


def inspect_tables(pipe: Pipeline, doc, names: Sequence[str]) -> str:
    """TSV dump of the requested matrices and score vectors for ``doc``."""
    lines = []
    for name in names:
        lines.append(f"# {doc.id} {name}")
        if name == "freq":
            fm = pipe.frequency_matrix(doc)
            lines.append("\t".join(fm.words))
            lines.extend("\t".join(str(int(c)) for c in row) for row in fm.counts)
        elif name == "textrank":
            lines.extend(_fmt(x) for x in pipe.textrank_scores(doc).scores)
        elif name == "tfidf":
            lines.extend(_fmt(x) for x in pipe.tfidf_scores(doc).scores)
        else:
            sim = pipe.similarity(name, doc)
            lines.extend("\t".join(_fmt(x) for x in row) for row in sim.values)
    return "\n".join(lines) + "\n"


def cmd_inspect(args, out=sys.stdout, err=sys.stderr) -> int:
    cfg = make_config(args)
    names = _dump_targets(args)
    needed = {"wordnet": "lexicon", "glove": "vectors", "embedding": "embeddings"}
    for name in names:
        if name in needed and getattr(cfg, needed[name]) is None:
            raise ResourceError(f"--dump {name} needs --{needed[name]}")
    res = _load_resources(cfg)
    pipe = Pipeline(cfg, res)
    for doc in pipe.add_documents(_read_inputs(args.inputs)):
        out.write(inspect_tables(pipe, doc, names))
    return 0


COMMANDS = {"summarize": cmd_summarize, "train": cmd_train, "eval": cmd_eval, "inspect": cmd_inspect}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    prog = parser.prog
    try:
        return COMMANDS[args.command](args, sys.stdout, sys.stderr)
    except UsageError as exc:
        print(f"{prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceError, FormatError) as exc:
        print(f"{prog}: resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except DataError as exc:
        print(f"{prog}: data error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
