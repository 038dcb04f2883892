"""Command-line interface: build, classify, evaluate, folds."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .builder import SentiDDLexicon, build_from_dataset
from .classifier import UnigramLexicon, decide_all, decisions_to_jsonl
from .corpus import read_phrasebank, stratified_folds
from .direction import DirectionalLexicon
from .errors import EmptyCorpus, EmptyTagSet, SentiDDError
from .evaluation import (
    AGGREGATE_FOLD_MEAN,
    AGGREGATE_POOLED,
    METHODS,
    run_cv,
    summary_csv,
    per_class_csv,
)
from .textprep import (
    DEFAULT_MIN_COUNT,
    DEFAULT_MIN_LENGTH,
    Preprocessor,
    load_irregular_nouns,
    load_stopwords,
)

EXIT_OK = 0
EXIT_BAD_INPUT = 2
EXIT_EMPTY_TAG_SET = 3


def _write_output(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _load_directional(args) -> DirectionalLexicon:
    if getattr(args, "dir_lexicon", None):
        return DirectionalLexicon.from_file(args.dir_lexicon)
    return DirectionalLexicon.default()


def _make_preprocessor(args, directional: DirectionalLexicon) -> Preprocessor:
    stopwords = (
        load_stopwords(args.stopwords) if getattr(args, "stopwords", None) else None
    )
    irregular = (
        load_irregular_nouns(args.irregular_nouns)
        if getattr(args, "irregular_nouns", None)
        else None
    )
    return Preprocessor(directional, stopwords=stopwords, irregular=irregular)


def _add_corpus_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--corpus", required=True, help="labeled corpus file")
    parser.add_argument("--separator", default="@", help="sentence/label separator (default: @)")


def _add_prep_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--dir-lexicon", help="directional word list file ([up]/[down] sections)")
    parser.add_argument("--stopwords", help="stopword list file overriding the bundled one")
    parser.add_argument(
        "--irregular-nouns", help="irregular-noun table file overriding the bundled one"
    )


def _add_build_args(parser: argparse.ArgumentParser) -> None:
    _add_prep_args(parser)
    parser.add_argument(
        "--min-count",
        type=int,
        default=DEFAULT_MIN_COUNT,
        help=f"minimum corpus frequency for candidate lemmas (default: {DEFAULT_MIN_COUNT})",
    )
    parser.add_argument(
        "--min-length",
        type=int,
        default=DEFAULT_MIN_LENGTH,
        help=f"minimum candidate lemma length (default: {DEFAULT_MIN_LENGTH})",
    )


def cmd_build(args) -> int:
    dataset = read_phrasebank(args.corpus, separator=args.separator)
    directional = _load_directional(args)
    result = build_from_dataset(
        dataset,
        directional=directional,
        preprocessor=_make_preprocessor(args, directional),
        min_count=args.min_count,
        min_length=args.min_length,
    )
    stats = (
        f"proportional={result.n_proportional} inverse={result.n_inverse} "
        f"proportional_words={len(result.lexicon.proportional_words)} "
        f"inverse_words={len(result.lexicon.inverse_words)} "
        f"positive_pairs={len(result.lexicon.positive_pairs)} "
        f"negative_pairs={len(result.lexicon.negative_pairs)}\n"
    )
    if args.out and args.out != "-":
        _write_output(result.lexicon.to_json(), args.out)
        sys.stdout.write(stats)
    else:
        sys.stdout.write(result.lexicon.to_json())
        sys.stderr.write(stats)
    return EXIT_OK


def cmd_classify(args) -> int:
    directional = _load_directional(args)
    unigrams = UnigramLexicon.from_files(args.pos_words, args.neg_words)
    senti_dd = (
        SentiDDLexicon.from_file(args.senti_dd) if args.senti_dd else SentiDDLexicon.empty()
    )
    try:
        dataset = read_phrasebank(args.corpus, separator=args.separator)
    except EmptyCorpus:
        _write_output("", args.out)
        return EXIT_OK
    preprocessor = _make_preprocessor(args, directional)
    tokenized = preprocessor.process_all(dataset.sentences)
    decisions = decide_all(tokenized, unigrams, senti_dd, directional)
    _write_output(decisions_to_jsonl(decisions, dataset.sentences), args.out)
    return EXIT_OK


def cmd_evaluate(args) -> int:
    dataset = read_phrasebank(args.corpus, separator=args.separator)
    directional = _load_directional(args)
    unigrams = UnigramLexicon.from_files(args.pos_words, args.neg_words)
    methods = args.method or list(METHODS)
    aggregate = AGGREGATE_POOLED if args.pooled else AGGREGATE_FOLD_MEAN
    preprocessor = _make_preprocessor(args, directional)
    reports = [
        run_cv(
            dataset,
            k=args.k,
            seed=args.seed,
            method=method,
            unigrams=unigrams,
            directional=directional,
            preprocessor=preprocessor,
            min_count=args.min_count,
            min_length=args.min_length,
            aggregate=aggregate,
            threads=args.threads,
        )
        for method in methods
    ]
    if args.format == "json":
        payload = json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n"
        _write_output(payload, args.out)
    else:
        summary = summary_csv(reports)
        per_class = per_class_csv(reports)
        if args.out and args.out != "-":
            _write_output(summary, args.out)
            per_class_path = Path(args.out).with_suffix(".per_class.csv")
            per_class_path.write_text(per_class, encoding="utf-8")
            sys.stderr.write(f"per-class table written to {per_class_path}\n")
        else:
            sys.stdout.write(summary)
            sys.stdout.write("\n")
            sys.stdout.write(per_class)
    return EXIT_OK


def cmd_folds(args) -> int:
    dataset = read_phrasebank(args.corpus, separator=args.separator)
    split = stratified_folds(dataset, k=args.k, seed=args.seed)
    _write_output(split.to_json() + "\n", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="senti-dd",
        description=(
            "Build a context-aware financial sentiment lexicon of "
            "(directional word, direction-dependent word) pairs from a labeled "
            "corpus, and run lexicon-based three-class sentiment classification."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="construct the pair lexicon from a labeled corpus")
    _add_corpus_args(p_build)
    _add_build_args(p_build)
    p_build.add_argument("--out", help="output path for the lexicon JSON (default: stdout)")
    p_build.set_defaults(func=cmd_build)

    p_classify = sub.add_parser("classify", help="classify corpus sentences, one JSON line each")
    _add_corpus_args(p_classify)
    _add_prep_args(p_classify)
    p_classify.add_argument("--pos-words", required=True, help="positive unigram list file")
    p_classify.add_argument("--neg-words", required=True, help="negative unigram list file")
    p_classify.add_argument("--senti-dd", help="pair lexicon JSON (omit for unigram-only scoring)")
    p_classify.add_argument("--out", help="output path for JSON Lines (default: stdout)")
    p_classify.set_defaults(func=cmd_classify)

    p_eval = sub.add_parser("evaluate", help="stratified k-fold evaluation of the methods")
    _add_corpus_args(p_eval)
    _add_build_args(p_eval)
    p_eval.add_argument("--pos-words", required=True, help="positive unigram list file")
    p_eval.add_argument("--neg-words", required=True, help="negative unigram list file")
    p_eval.add_argument(
        "--method",
        action="append",
        choices=list(METHODS),
        help="method to evaluate; repeatable (default: both)",
    )
    p_eval.add_argument("--k", type=int, default=5, help="number of folds (default: 5)")
    p_eval.add_argument("--seed", type=int, default=13, help="fold shuffle seed (default: 13)")
    p_eval.add_argument("--format", choices=["json", "csv"], default="json")
    p_eval.add_argument(
        "--pooled",
        action="store_true",
        help="pool confusion counts over folds instead of averaging fold metrics",
    )
    p_eval.add_argument(
        "--threads",
        type=int,
        default=os.cpu_count() or 1,
        help="worker threads for fold evaluation (default: available parallelism)",
    )
    p_eval.add_argument("--out", help="output path (default: stdout)")
    p_eval.set_defaults(func=cmd_evaluate)

    p_folds = sub.add_parser("folds", help="export a stratified fold manifest as JSON")
    _add_corpus_args(p_folds)
    p_folds.add_argument("--k", type=int, default=5, help="number of folds (default: 5)")
    p_folds.add_argument("--seed", type=int, default=13, help="fold shuffle seed (default: 13)")
    p_folds.add_argument("--out", help="output path (default: stdout)")
    p_folds.set_defaults(func=cmd_folds)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except EmptyTagSet as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_EMPTY_TAG_SET
    except (SentiDDError, OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
