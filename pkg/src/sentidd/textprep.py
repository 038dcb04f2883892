"""Deterministic text normalization: tokenization, stemming, candidate-term
extraction and corpus vocabulary statistics.

Candidate terms approximate a noun inventory without a statistical tagger:
stopword and directional-word removal, plural-to-singular suffix rules with
an irregular-noun exception table, and length/frequency thresholds. The
association scoring downstream is robust to the extra non-noun candidates
this lets through, because weakly associated words score near zero.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Mapping, Sequence

from .direction import DirectionalLexicon
from .porter import stem
from .resources import bundled_text, read_word_lines

#: Candidate filters map a sentence's tokens to candidate lemmas. The
#: default is rule-based; a part-of-speech-based filter can be plugged in.
CandidateFilter = Callable[[Sequence[str]], list[str]]

_TOKEN_RE = re.compile(r"[^\W_]+(?:-[^\W_]+)*", re.UNICODE)

DEFAULT_MIN_COUNT = 6
DEFAULT_MIN_LENGTH = 2


def tokenize(text: str) -> list[str]:
    """Lowercase and split on anything that is not a letter, digit or
    internal hyphen; tokens without any letter are dropped."""
    tokens = _TOKEN_RE.findall(text.lower())
    return [t for t in tokens if any(c.isalpha() for c in t)]


def load_stopwords(path: str | Path | None = None) -> frozenset[str]:
    """Load the stopword list (bundled ~180-word standard English list)."""
    text = Path(path).read_text(encoding="utf-8") if path else bundled_text("stopwords.txt")
    return frozenset(read_word_lines(text))


def load_irregular_nouns(path: str | Path | None = None) -> dict[str, str]:
    """Load the irregular-noun table: lines of ``<word> <lemma>``."""
    text = Path(path).read_text(encoding="utf-8") if path else bundled_text("irregular_nouns.txt")
    table = {}
    for line in read_word_lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"irregular-noun line needs two fields: {line!r}")
        table[parts[0]] = parts[1]
    return table


def lemmatize_noun(token: str, irregular: Mapping[str, str]) -> str:
    """Singularize a plural noun by suffix rules, with irregular overrides."""
    if token in irregular:
        return irregular[token]
    if token.endswith("ies"):
        return token[:-3] + "y"
    if token.endswith(("ses", "xes", "zes", "ches", "shes")):
        return token[:-2]
    if token.endswith("s") and not token.endswith("ss"):
        return token[:-1]
    return token


@dataclass(frozen=True)
class TokenizedSentence:
    """A sentence's tokens, their stems, and its candidate lemmas."""

    sentence_id: int
    tokens: tuple[str, ...]
    stems: tuple[str, ...]
    candidates: tuple[str, ...]

    def __post_init__(self):
        if len(self.tokens) != len(self.stems):
            raise ValueError("tokens and stems must be parallel")


def make_candidate_filter(
    directional: DirectionalLexicon,
    stopwords: frozenset[str],
    irregular: Mapping[str, str],
) -> CandidateFilter:
    """Build the default rule-based candidate filter.

    Removes stopwords and directional words (stem-level match), applies
    noun lemmatization, drops length-1 lemmas, and keeps one occurrence
    per lemma per sentence in first-seen order.
    """
    directional_stems = directional.up_stems | directional.down_stems

    def extract(tokens: Sequence[str]) -> list[str]:
        out: list[str] = []
        seen: set[str] = set()
        for token in tokens:
            if token in stopwords:
                continue
            if stem(token) in directional_stems:
                continue
            lemma = lemmatize_noun(token, irregular)
            if len(lemma) < 2 or stem(lemma) in directional_stems:
                continue
            if lemma not in seen:
                seen.add(lemma)
                out.append(lemma)
        return out

    return extract


def extract_candidates(
    tokens: Sequence[str],
    stopwords: frozenset[str],
    directional: DirectionalLexicon,
    irregular: Mapping[str, str] | None = None,
) -> list[str]:
    """Candidate lemmas for one sentence; see make_candidate_filter."""
    table = irregular if irregular is not None else load_irregular_nouns()
    return make_candidate_filter(directional, stopwords, table)(tokens)


class Preprocessor:
    """Tokenizes, stems and extracts candidate lemmas for sentences.

    Stateless after construction; safe to reuse across sentences.
    """

    def __init__(
        self,
        directional: DirectionalLexicon,
        stopwords: frozenset[str] | None = None,
        irregular: Mapping[str, str] | None = None,
        candidate_filter: CandidateFilter | None = None,
    ):
        self.directional = directional
        self.stopwords = stopwords if stopwords is not None else load_stopwords()
        self.irregular = dict(irregular) if irregular is not None else load_irregular_nouns()
        self.candidate_filter = candidate_filter or make_candidate_filter(
            directional, self.stopwords, self.irregular
        )

    def process(self, sentence_id: int, text: str) -> TokenizedSentence:
        tokens = tokenize(text)
        return TokenizedSentence(
            sentence_id=sentence_id,
            tokens=tuple(tokens),
            stems=tuple(stem(t) for t in tokens),
            candidates=tuple(self.candidate_filter(tokens)),
        )

    def process_all(self, sentences) -> list[TokenizedSentence]:
        """Process an iterable of LabeledSentence in order."""
        return [self.process(s.id, s.text) for s in sentences]


@dataclass(frozen=True)
class VocabStats:
    """Corpus-level candidate-lemma frequencies after thresholding."""

    counts: Mapping[str, int]
    min_count: int
    min_length: int

    def __contains__(self, lemma: str) -> bool:
        return lemma in self.counts

    def __len__(self) -> int:
        return len(self.counts)


def build_vocab(
    sentences: Iterable[TokenizedSentence],
    min_count: int = DEFAULT_MIN_COUNT,
    min_length: int = DEFAULT_MIN_LENGTH,
) -> VocabStats:
    """Count sentence-level candidate presence and apply thresholds.

    A lemma counts at most once per sentence. Retains lemmas occurring in
    at least min_count sentences with length at least min_length; the
    defaults keep words seen more than five times and at least two
    characters long.
    """
    if min_count < 1:
        raise ValueError("min_count must be >= 1")
    counter: Counter[str] = Counter()
    for ts in sentences:
        counter.update(set(ts.candidates))
    retained = {
        lemma: count
        for lemma, count in counter.items()
        if count >= min_count and len(lemma) >= min_length
    }
    return VocabStats(counts=retained, min_count=min_count, min_length=min_length)
