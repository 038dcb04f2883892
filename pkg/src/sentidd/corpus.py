"""Labeled sentence corpora in the one-record-per-line format and
stratified cross-validation folds.

Corpus file format: ``<sentence><sep><label>`` per line, default separator
"@". The label token is taken after the *last* separator occurrence, so
sentences containing the separator character survive a round trip.
"""

from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterator

from .errors import EmptyCorpus, MalformedLine, TooFewSamples


class Label(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"

    @classmethod
    def from_token(cls, token: str) -> "Label":
        return cls(token.strip().lower())

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class LabeledSentence:
    """One corpus sentence with its gold polarity label."""

    id: int
    text: str
    label: Label

    def __post_init__(self):
        if not self.text.strip():
            raise ValueError(f"sentence {self.id} is empty")


@dataclass(frozen=True)
class Dataset:
    """An ordered corpus of labeled sentences with contiguous ids."""

    name: str
    sentences: tuple[LabeledSentence, ...]

    def __post_init__(self):
        for i, s in enumerate(self.sentences):
            if s.id != i:
                raise ValueError(f"sentence ids must be contiguous from 0, got {s.id} at {i}")

    def __len__(self) -> int:
        return len(self.sentences)

    def __iter__(self) -> Iterator[LabeledSentence]:
        return iter(self.sentences)

    def label_counts(self) -> Counter:
        return Counter(s.label for s in self.sentences)

    def label_proportions(self) -> dict[Label, float]:
        counts = self.label_counts()
        n = len(self.sentences)
        return {label: counts.get(label, 0) / n for label in Label}


def parse_phrasebank(raw_text: str, separator: str = "@", name: str = "corpus") -> Dataset:
    """Parse corpus text into a Dataset.

    Each non-blank line must contain the separator; the label is the token
    after its last occurrence and must be positive/negative/neutral
    (case-insensitive). Raises MalformedLine or EmptyCorpus.
    """
    if not separator:
        raise ValueError("separator must be non-empty")
    sentences = []
    # split on newlines only; splitlines() would also break on exotic
    # separators (\x1c-\x1e,  ...) that may legitimately occur in text
    for line_no, line in enumerate(raw_text.split("\n"), start=1):
        line = line.rstrip("\r")
        if not line.strip():
            continue
        text, sep, label_token = line.rpartition(separator)
        if not sep:
            raise MalformedLine(line_no, f"separator {separator!r} not found")
        try:
            label = Label.from_token(label_token)
        except ValueError:
            raise MalformedLine(line_no, f"unknown label {label_token.strip()!r}") from None
        text = text.strip()
        if not text:
            raise MalformedLine(line_no, "empty sentence")
        sentences.append(LabeledSentence(id=len(sentences), text=text, label=label))
    if not sentences:
        raise EmptyCorpus("no non-blank lines in corpus")
    return Dataset(name=name, sentences=tuple(sentences))


def read_phrasebank(
    path: str | Path,
    separator: str = "@",
    name: str | None = None,
    latin1_fallback: bool = True,
) -> Dataset:
    """Read a corpus file, decoding UTF-8 with optional Latin-1 fallback.

    The fallback matches older corpus distributions that ship as Latin-1.
    """
    path = Path(path)
    data = path.read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        if not latin1_fallback:
            raise
        text = data.decode("latin-1")
    return parse_phrasebank(text, separator=separator, name=name or path.stem)


def to_phrasebank_text(dataset: Dataset, separator: str = "@") -> str:
    """Serialize back to the line format; re-parsing yields an equal Dataset."""
    return "".join(f"{s.text}{separator}{s.label.value}\n" for s in dataset.sentences)


@dataclass(frozen=True)
class FoldSplit:
    """A stratified partition of dataset ids into k folds."""

    k: int
    seed: int
    folds: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("k must be >= 2")
        if len(self.folds) != self.k:
            raise ValueError("number of folds must equal k")
        all_ids = [i for fold in self.folds for i in fold]
        if len(set(all_ids)) != len(all_ids):
            raise ValueError("folds are not disjoint")
        if sorted(all_ids) != list(range(len(all_ids))):
            raise ValueError("folds do not partition a contiguous id range")

    def test_ids(self, fold_index: int) -> tuple[int, ...]:
        return self.folds[fold_index]

    def train_ids(self, fold_index: int) -> tuple[int, ...]:
        return tuple(
            i for j, fold in enumerate(self.folds) if j != fold_index for i in fold
        )

    def to_json(self) -> str:
        return json.dumps(
            {"k": self.k, "seed": self.seed, "folds": [list(f) for f in self.folds]},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "FoldSplit":
        obj = json.loads(text)
        return cls(
            k=obj["k"],
            seed=obj["seed"],
            folds=tuple(tuple(f) for f in obj["folds"]),
        )


def stratified_folds(dataset: Dataset, k: int, seed: int) -> FoldSplit:
    """Split ids into k folds preserving the label distribution.

    Ids are grouped by label, each group is shuffled with the seed, and
    dealt round-robin, so per-fold class counts stay within +/-1 of the
    ideal proportional count. Deterministic for a fixed (dataset, k, seed).
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    by_label: dict[Label, list[int]] = {label: [] for label in Label}
    for s in dataset.sentences:
        by_label[s.label].append(s.id)

    for label in Label:
        count = len(by_label[label])
        if 0 < count < k:
            raise TooFewSamples(label, count, k)

    rng = random.Random(seed)
    fold_lists: list[list[int]] = [[] for _ in range(k)]
    for label in Label:
        ids = by_label[label]
        rng.shuffle(ids)
        for position, sentence_id in enumerate(ids):
            fold_lists[position % k].append(sentence_id)

    return FoldSplit(
        k=k, seed=seed, folds=tuple(tuple(sorted(f)) for f in fold_lists)
    )
