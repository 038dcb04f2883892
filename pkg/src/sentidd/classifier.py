"""Lexicon-based three-class sentiment classification.

The base score counts positive minus negative unigram matches. The
context score counts distinct positive-context minus negative-context
pairs present in the sentence (a pair is present when the directional
word matches some token at stem level and the dependent lemma is among
the sentence's candidates). The refined score shifts the base score by
the sign of the context score, and the predicted class is the sign of
the refined score.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .builder import SentiDDLexicon
from .corpus import Label, LabeledSentence
from .direction import DirectionalLexicon
from .errors import LexiconFormatError
from .porter import stem
from .resources import read_word_lines
from .textprep import TokenizedSentence


@dataclass(frozen=True)
class UnigramLexicon:
    """Flat positive/negative word lists, matched on exact lowercase tokens."""

    positive: frozenset[str]
    negative: frozenset[str]

    def __post_init__(self):
        overlap = self.positive & self.negative
        if overlap:
            raise LexiconFormatError(
                f"words in both positive and negative lists: {', '.join(sorted(overlap))}"
            )

    @classmethod
    def from_files(cls, positive_path: str | Path, negative_path: str | Path) -> "UnigramLexicon":
        """Load from two plain-text files, one word per line, '#' comments."""
        pos = read_word_lines(Path(positive_path).read_text(encoding="utf-8"))
        neg = read_word_lines(Path(negative_path).read_text(encoding="utf-8"))
        return cls(positive=frozenset(pos), negative=frozenset(neg))


def base_score(sentence: TokenizedSentence, lexicon: UnigramLexicon) -> int:
    """Positive-token occurrences minus negative-token occurrences."""
    pos = sum(1 for t in sentence.tokens if t in lexicon.positive)
    neg = sum(1 for t in sentence.tokens if t in lexicon.negative)
    return pos - neg


def context_score(
    sentence: TokenizedSentence,
    senti_dd: SentiDDLexicon,
    directional: DirectionalLexicon,
) -> int:
    """Distinct positive-context pairs minus distinct negative-context pairs.

    A pair (d, w) is present when some token's stem equals the stem of d
    and w is among the sentence's candidate lemmas. Matching is driven by
    the pair lexicon's own directional words, so pairs keep working even
    if the active directional lexicon diverges from the one the pairs
    were built with.
    """
    stems_present = set(sentence.stems)
    word_stem = directional.word_stems()
    present = {
        d
        for d in senti_dd.up_words | senti_dd.down_words
        if word_stem.get(d, stem(d)) in stems_present
    }
    if not present:
        return 0
    candidates = set(sentence.candidates)
    pos = 0
    neg = 0
    for d in present:
        for w in candidates:
            if (d, w) in senti_dd.positive_pairs:
                pos += 1
            elif (d, w) in senti_dd.negative_pairs:
                neg += 1
    return pos - neg


def refine(base: int, context: int) -> int:
    """Shift the base score by the sign of the context score."""
    if context > 0:
        return base + 1
    if context < 0:
        return base - 1
    return base


def classify(refined: int) -> Label:
    """Positive above zero, negative below, neutral at exactly zero."""
    if refined > 0:
        return Label.POSITIVE
    if refined < 0:
        return Label.NEGATIVE
    return Label.NEUTRAL


@dataclass(frozen=True)
class SentimentDecision:
    """Scores and predicted class for one sentence."""

    sentence_id: int
    base_score: int
    context_score: int
    refined_score: int
    predicted: Label


def decide(
    sentence: TokenizedSentence,
    unigrams: UnigramLexicon,
    senti_dd: SentiDDLexicon,
    directional: DirectionalLexicon,
) -> SentimentDecision:
    """Run the full per-sentence scoring chain."""
    base = base_score(sentence, unigrams)
    context = context_score(sentence, senti_dd, directional)
    refined = refine(base, context)
    return SentimentDecision(
        sentence_id=sentence.sentence_id,
        base_score=base,
        context_score=context,
        refined_score=refined,
        predicted=classify(refined),
    )


def decide_all(
    tokenized: Iterable[TokenizedSentence],
    unigrams: UnigramLexicon,
    senti_dd: SentiDDLexicon,
    directional: DirectionalLexicon,
) -> list[SentimentDecision]:
    return [decide(ts, unigrams, senti_dd, directional) for ts in tokenized]


def decisions_to_jsonl(
    decisions: Sequence[SentimentDecision],
    gold: Sequence[LabeledSentence] | None = None,
) -> str:
    """One JSON record per sentence: {id, base, context, refined, predicted, gold}."""
    gold_by_id = {s.id: s.label for s in gold} if gold is not None else {}
    lines = []
    for d in decisions:
        record = {
            "id": d.sentence_id,
            "base": d.base_score,
            "context": d.context_score,
            "refined": d.refined_score,
            "predicted": d.predicted.value,
            "gold": gold_by_id[d.sentence_id].value if d.sentence_id in gold_by_id else None,
        }
        lines.append(json.dumps(record, sort_keys=True, separators=(",", ":")))
    return "\n".join(lines) + ("\n" if lines else "")
