"""Directional word lists, per-sentence direction scores, and
direction-dependency tagging of polar sentences.

A sentence's direction score is the number of "up"-word occurrences minus
the number of "down"-word occurrences, matched at stem level. Polar
sentences whose score is non-zero get a direction-dependency tag:
proportional when sentiment and direction agree in sign, inversely
proportional when they oppose.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import TYPE_CHECKING, Iterable, Sequence

from .corpus import Label, LabeledSentence
from .errors import LexiconFormatError
from .porter import stem
from .resources import bundled_text

if TYPE_CHECKING:
    from .textprep import TokenizedSentence


class DirectionDependencyType(Enum):
    PROPORTIONAL = "proportional"
    INVERSELY_PROPORTIONAL = "inversely_proportional"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class DirectionalLexicon:
    """The "up"/"down" word lists with their precomputed stems."""

    up_words: frozenset[str]
    down_words: frozenset[str]
    up_stems: frozenset[str]
    down_stems: frozenset[str]

    def __post_init__(self):
        if self.up_stems & self.down_stems:
            overlap = sorted(self.up_stems & self.down_stems)
            raise LexiconFormatError(f"up/down stems overlap: {', '.join(overlap)}")

    @classmethod
    def from_words(cls, up_words: Iterable[str], down_words: Iterable[str]) -> "DirectionalLexicon":
        up = frozenset(w.lower() for w in up_words)
        down = frozenset(w.lower() for w in down_words)
        return cls(
            up_words=up,
            down_words=down,
            up_stems=frozenset(stem(w) for w in up),
            down_stems=frozenset(stem(w) for w in down),
        )

    @classmethod
    def from_text(cls, text: str) -> "DirectionalLexicon":
        """Parse the two-section file format: "[up]" and "[down]" headers,
        one word per line, '#' comments allowed."""
        sections: dict[str, list[str]] = {"up": [], "down": []}
        current: list[str] | None = None
        for line_no, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("[") and line.endswith("]"):
                name = line[1:-1].strip().lower()
                if name not in sections:
                    raise LexiconFormatError(f"line {line_no}: unknown section [{name}]")
                current = sections[name]
                continue
            if current is None:
                raise LexiconFormatError(f"line {line_no}: word before any [up]/[down] header")
            current.append(line.lower())
        if not sections["up"] and not sections["down"]:
            raise LexiconFormatError("directional lexicon has no words")
        return cls.from_words(sections["up"], sections["down"])

    @classmethod
    def from_file(cls, path: str | Path) -> "DirectionalLexicon":
        return cls.from_text(Path(path).read_text(encoding="utf-8"))

    @classmethod
    def default(cls) -> "DirectionalLexicon":
        """The bundled 31-word list: 20 "up" words, 11 "down" words."""
        return cls.from_text(bundled_text("directional_words.txt"))

    def word_stems(self) -> dict[str, str]:
        """Map each directional word to its stem."""
        return {w: stem(w) for w in self.up_words | self.down_words}


@dataclass(frozen=True)
class TaggedSentence:
    """A polar sentence with its direction score and dependency tag."""

    sentence_id: int
    label: Label
    direction_score: int
    dep_type: DirectionDependencyType

    def __post_init__(self):
        if self.label is Label.NEUTRAL:
            raise ValueError("tagged sentences must be polar")
        if self.direction_score == 0:
            raise ValueError("tagged sentences must have a non-zero direction score")
        expected = _dep_type(self.label, self.direction_score)
        if self.dep_type is not expected:
            raise ValueError(
                f"dep_type {self.dep_type} inconsistent with "
                f"label={self.label} score={self.direction_score}"
            )


def _dep_type(label: Label, score: int) -> DirectionDependencyType:
    sentiment_positive = label is Label.POSITIVE
    if sentiment_positive == (score > 0):
        return DirectionDependencyType.PROPORTIONAL
    return DirectionDependencyType.INVERSELY_PROPORTIONAL


def direction_score(sentence: "TokenizedSentence", lexicon: DirectionalLexicon) -> int:
    """Up-stem occurrences minus down-stem occurrences; repeats count."""
    up = sum(1 for s in sentence.stems if s in lexicon.up_stems)
    down = sum(1 for s in sentence.stems if s in lexicon.down_stems)
    return up - down


def tag_sentence(sentence: LabeledSentence, score: int) -> TaggedSentence | None:
    """Tag a sentence, or return None for neutral or direction-free ones."""
    if sentence.label is Label.NEUTRAL or score == 0:
        return None
    return TaggedSentence(
        sentence_id=sentence.id,
        label=sentence.label,
        direction_score=score,
        dep_type=_dep_type(sentence.label, score),
    )


def tag_corpus(
    sentences: Iterable[LabeledSentence],
    tokenized: Sequence["TokenizedSentence"],
    lexicon: DirectionalLexicon,
) -> list[TaggedSentence]:
    """Tag every sentence, preserving order; untagged ones are skipped.

    ``tokenized`` must be parallel to ``sentences``.
    """
    tags = []
    for sentence, ts in zip(sentences, tokenized, strict=True):
        if sentence.id != ts.sentence_id:
            raise ValueError(
                f"tokenized sentence {ts.sentence_id} does not match corpus id {sentence.id}"
            )
        tag = tag_sentence(sentence, direction_score(ts, lexicon))
        if tag is not None:
            tags.append(tag)
    return tags
