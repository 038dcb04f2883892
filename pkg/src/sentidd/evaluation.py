"""Cross-validation experiment driver and classification metrics.

Per-class precision/recall/F1 come from the usual confusion-matrix
counts, with the 0/0 convention mapped to 0 and flagged. Weighted
averages use test-fold class supports. The default report aggregates by
averaging per-fold results uniformly; a pooled variant (single confusion
matrix over all folds) is available for sensitivity checks.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .builder import SentiDDLexicon, build_lexicon
from .classifier import UnigramLexicon, decide
from .corpus import Dataset, Label, stratified_folds
from .direction import DirectionalLexicon
from .errors import EmptyTagSet
from .textprep import DEFAULT_MIN_COUNT, DEFAULT_MIN_LENGTH, Preprocessor

CLASSES = (Label.POSITIVE, Label.NEGATIVE, Label.NEUTRAL)

METHOD_LM = "lm"
METHOD_LM_SENTIDD = "lm+sentidd"
METHODS = (METHOD_LM, METHOD_LM_SENTIDD)

AGGREGATE_FOLD_MEAN = "fold_mean"
AGGREGATE_POOLED = "pooled"


@dataclass(frozen=True)
class ConfusionCounts:
    """Counts per ordered (gold, predicted) class pair."""

    counts: Mapping[tuple[Label, Label], int]

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Label, Label]]) -> "ConfusionCounts":
        counts: dict[tuple[Label, Label], int] = {}
        for gold, predicted in pairs:
            key = (gold, predicted)
            counts[key] = counts.get(key, 0) + 1
        return cls(counts=counts)

    def __add__(self, other: "ConfusionCounts") -> "ConfusionCounts":
        merged = dict(self.counts)
        for key, value in other.counts.items():
            merged[key] = merged.get(key, 0) + value
        return ConfusionCounts(counts=merged)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def tp(self, cls: Label) -> int:
        return self.counts.get((cls, cls), 0)

    def fp(self, cls: Label) -> int:
        return sum(
            count for (gold, pred), count in self.counts.items() if pred is cls and gold is not cls
        )

    def fn(self, cls: Label) -> int:
        return sum(
            count for (gold, pred), count in self.counts.items() if gold is cls and pred is not cls
        )

    def support(self, cls: Label) -> int:
        return sum(count for (gold, _), count in self.counts.items() if gold is cls)


@dataclass(frozen=True)
class ClassMetrics:
    precision: float
    recall: float
    f1: float
    zero_division: frozenset[str] = frozenset()


def metrics(conf: ConfusionCounts, cls: Label) -> ClassMetrics:
    """Precision, recall and F1 for one class; 0/0 yields 0, flagged."""
    tp = conf.tp(cls)
    fp = conf.fp(cls)
    fn = conf.fn(cls)
    flags = set()
    if tp + fp == 0:
        precision = 0.0
        flags.add("precision")
    else:
        precision = tp / (tp + fp)
    if tp + fn == 0:
        recall = 0.0
        flags.add("recall")
    else:
        recall = tp / (tp + fn)
    if precision + recall == 0:
        f1 = 0.0
        flags.add("f1")
    else:
        f1 = 2 * precision * recall / (precision + recall)
    return ClassMetrics(precision=precision, recall=recall, f1=f1, zero_division=frozenset(flags))


def weighted_metrics(conf: ConfusionCounts, per_class: Mapping[Label, ClassMetrics]) -> ClassMetrics:
    """Support-weighted average of per-class metrics."""
    total = conf.total
    if total == 0:
        return ClassMetrics(0.0, 0.0, 0.0, frozenset({"precision", "recall", "f1"}))
    precision = sum(conf.support(c) / total * per_class[c].precision for c in CLASSES)
    recall = sum(conf.support(c) / total * per_class[c].recall for c in CLASSES)
    f1 = sum(conf.support(c) / total * per_class[c].f1 for c in CLASSES)
    flags: set[str] = set()
    for c in CLASSES:
        if conf.support(c) > 0:
            flags |= per_class[c].zero_division
    return ClassMetrics(precision=precision, recall=recall, f1=f1, zero_division=frozenset(flags))


@dataclass(frozen=True)
class FoldReport:
    fold_index: int
    confusion: ConfusionCounts
    per_class: Mapping[Label, ClassMetrics]
    weighted: ClassMetrics


def _fold_report(fold_index: int, conf: ConfusionCounts) -> FoldReport:
    per_class = {c: metrics(conf, c) for c in CLASSES}
    return FoldReport(
        fold_index=fold_index,
        confusion=conf,
        per_class=per_class,
        weighted=weighted_metrics(conf, per_class),
    )


@dataclass(frozen=True)
class EvalReport:
    dataset_name: str
    method_name: str
    k: int
    seed: int
    aggregate: str
    per_fold: tuple[FoldReport, ...]
    per_class: Mapping[Label, ClassMetrics]
    weighted: ClassMetrics

    def to_dict(self) -> dict:
        def metrics_dict(m: ClassMetrics) -> dict:
            d = {"precision": m.precision, "recall": m.recall, "f1": m.f1}
            if m.zero_division:
                d["zero_division"] = sorted(m.zero_division)
            return d

        return {
            "dataset": self.dataset_name,
            "method": self.method_name,
            "k": self.k,
            "seed": self.seed,
            "aggregate": self.aggregate,
            "weighted": metrics_dict(self.weighted),
            "per_class": {c.value: metrics_dict(self.per_class[c]) for c in CLASSES},
            "per_fold": [
                {
                    "fold": f.fold_index,
                    "weighted": metrics_dict(f.weighted),
                    "per_class": {c.value: metrics_dict(f.per_class[c]) for c in CLASSES},
                    "support": {c.value: f.confusion.support(c) for c in CLASSES},
                }
                for f in self.per_fold
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def _mean_metrics(parts: Sequence[ClassMetrics]) -> ClassMetrics:
    n = len(parts)
    flags: set[str] = set()
    for m in parts:
        flags |= m.zero_division
    return ClassMetrics(
        precision=sum(m.precision for m in parts) / n,
        recall=sum(m.recall for m in parts) / n,
        f1=sum(m.f1 for m in parts) / n,
        zero_division=frozenset(flags),
    )


def _map_ordered(fn: Callable[[int], FoldReport], k: int, threads: int) -> list[FoldReport]:
    if threads <= 1:
        return [fn(i) for i in range(k)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, range(k)))


def run_cv(
    dataset: Dataset,
    k: int,
    seed: int,
    method: str,
    unigrams: UnigramLexicon,
    directional: DirectionalLexicon | None = None,
    preprocessor: Preprocessor | None = None,
    min_count: int = DEFAULT_MIN_COUNT,
    min_length: int = DEFAULT_MIN_LENGTH,
    aggregate: str = AGGREGATE_FOLD_MEAN,
    threads: int = 1,
) -> EvalReport:
    """Stratified k-fold evaluation of one classification method.

    For the pair-lexicon method the lexicon is rebuilt from each fold's
    training union only; the held-out fold never contributes counts. A
    training union with no taggable sentence degrades to an empty pair
    lexicon (classification then equals the unigram baseline).
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    if aggregate not in (AGGREGATE_FOLD_MEAN, AGGREGATE_POOLED):
        raise ValueError(f"unknown aggregate {aggregate!r}")
    directional = directional or DirectionalLexicon.default()
    prep = preprocessor or Preprocessor(directional)
    tokenized = prep.process_all(dataset.sentences)
    split = stratified_folds(dataset, k, seed)
    gold = {s.id: s.label for s in dataset.sentences}

    def evaluate_fold(i: int) -> FoldReport:
        if method == METHOD_LM_SENTIDD:
            train_ids = split.train_ids(i)
            try:
                senti_dd = build_lexicon(
                    [dataset.sentences[j] for j in train_ids],
                    [tokenized[j] for j in train_ids],
                    directional,
                    min_count=min_count,
                    min_length=min_length,
                ).lexicon
            except EmptyTagSet:
                senti_dd = SentiDDLexicon.empty()
        else:
            senti_dd = SentiDDLexicon.empty()
        pairs = []
        for j in split.test_ids(i):
            decision = decide(tokenized[j], unigrams, senti_dd, directional)
            pairs.append((gold[j], decision.predicted))
        return _fold_report(i, ConfusionCounts.from_pairs(pairs))

    per_fold = _map_ordered(evaluate_fold, k, threads)

    if aggregate == AGGREGATE_POOLED:
        pooled = per_fold[0].confusion
        for fold in per_fold[1:]:
            pooled = pooled + fold.confusion
        per_class = {c: metrics(pooled, c) for c in CLASSES}
        weighted = weighted_metrics(pooled, per_class)
    else:
        per_class = {c: _mean_metrics([f.per_class[c] for f in per_fold]) for c in CLASSES}
        weighted = _mean_metrics([f.weighted for f in per_fold])

    return EvalReport(
        dataset_name=dataset.name,
        method_name=method,
        k=k,
        seed=seed,
        aggregate=aggregate,
        per_fold=tuple(per_fold),
        per_class=per_class,
        weighted=weighted,
    )


def replicate_full_build(
    dataset: Dataset,
    directional: DirectionalLexicon | None = None,
    preprocessor: Preprocessor | None = None,
    min_count: int = DEFAULT_MIN_COUNT,
    min_length: int = DEFAULT_MIN_LENGTH,
) -> tuple[list[str], list[str]]:
    """Build on the whole dataset (no folds); sorted dependent-word lists."""
    from .builder import build_from_dataset

    result = build_from_dataset(
        dataset,
        directional=directional,
        preprocessor=preprocessor,
        min_count=min_count,
        min_length=min_length,
    )
    return sorted(result.lexicon.proportional_words), sorted(result.lexicon.inverse_words)


def summary_csv(reports: Sequence[EvalReport]) -> str:
    """One row per (dataset, method) with weighted precision/recall/F1."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["dataset", "method", "precision", "recall", "f1"])
    for r in reports:
        writer.writerow(
            [
                r.dataset_name,
                r.method_name,
                f"{r.weighted.precision:.4f}",
                f"{r.weighted.recall:.4f}",
                f"{r.weighted.f1:.4f}",
            ]
        )
    return buf.getvalue()


def per_class_csv(reports: Sequence[EvalReport]) -> str:
    """Rows of (dataset, class, measure) with one value column per method."""
    by_dataset: dict[str, list[EvalReport]] = {}
    method_order: list[str] = []
    for r in reports:
        by_dataset.setdefault(r.dataset_name, []).append(r)
        if r.method_name not in method_order:
            method_order.append(r.method_name)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["dataset", "class", "measure", *method_order])
    for dataset_name, dataset_reports in by_dataset.items():
        by_method = {r.method_name: r for r in dataset_reports}
        for cls in CLASSES:
            for measure in ("precision", "recall", "f1"):
                row = [dataset_name, cls.value, measure]
                for method in method_order:
                    report = by_method.get(method)
                    if report is None:
                        row.append("")
                    else:
                        row.append(f"{getattr(report.per_class[cls], measure):.4f}")
                writer.writerow(row)
    return buf.getvalue()
