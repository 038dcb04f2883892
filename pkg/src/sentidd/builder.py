"""Construction of the Senti-DD pair lexicon from tagged sentences.

Word/type association is pointwise mutual information over the tagged
sentences: PMI(w, t) = log2(p(w, t) / (p(w) p(t))), with all probabilities
estimated as sentence-level presence ratios. A word's direction-dependency
score is |PMI(w, proportional)| when the proportional PMI is strictly
larger, -|PMI(w, inverse)| when strictly smaller, and 0 on exact ties.
An undefined PMI (zero co-occurrence) always loses the comparison; the
tie test is done on integer cross-products so it is exact.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .corpus import Dataset
from .direction import (
    DirectionalLexicon,
    DirectionDependencyType,
    TaggedSentence,
    tag_corpus,
)
from .errors import EmptyTagSet, LexiconFormatError, OverlappingTypes, UnknownWord
from .textprep import (
    DEFAULT_MIN_COUNT,
    DEFAULT_MIN_LENGTH,
    Preprocessor,
    TokenizedSentence,
    VocabStats,
    build_vocab,
)

_P = DirectionDependencyType.PROPORTIONAL
_I = DirectionDependencyType.INVERSELY_PROPORTIONAL


@dataclass(frozen=True)
class TypeCounts:
    """Sentence-presence counts over the tagged-sentence universe."""

    n_sentences: int
    n_by_type: Mapping[DirectionDependencyType, int]
    n_word: Mapping[str, int]
    n_word_type: Mapping[tuple[str, DirectionDependencyType], int]


def count_cooccurrence(
    tagged: Sequence[TaggedSentence],
    candidates_by_sentence: Mapping[int, Iterable[str]],
    vocab: VocabStats,
) -> TypeCounts:
    """Count, per retained lemma, the tagged sentences containing it.

    A lemma counts at most once per sentence. Lemmas outside the retained
    vocabulary are ignored.
    """
    if not tagged:
        raise EmptyTagSet("cannot count co-occurrence over an empty tag set")
    n_by_type = {_P: 0, _I: 0}
    n_word: dict[str, int] = {}
    n_word_type: dict[tuple[str, DirectionDependencyType], int] = {}
    for tag in tagged:
        n_by_type[tag.dep_type] += 1
        for lemma in set(candidates_by_sentence.get(tag.sentence_id, ())):
            if lemma not in vocab:
                continue
            n_word[lemma] = n_word.get(lemma, 0) + 1
            key = (lemma, tag.dep_type)
            n_word_type[key] = n_word_type.get(key, 0) + 1
    return TypeCounts(
        n_sentences=len(tagged),
        n_by_type=n_by_type,
        n_word=n_word,
        n_word_type=n_word_type,
    )


def _pmi_value(n_wt: int, n_w: int, n_t: int, n: int) -> float:
    # log2( (n_wt/n) / ((n_w/n) * (n_t/n)) ) == log2(n_wt * n / (n_w * n_t))
    return math.log2((n_wt * n) / (n_w * n_t))


def pmi(word: str, dep_type: DirectionDependencyType, counts: TypeCounts) -> float | None:
    """PMI between a word and a type; None when they never co-occur."""
    n_w = counts.n_word.get(word, 0)
    if n_w == 0:
        raise UnknownWord(word)
    n_wt = counts.n_word_type.get((word, dep_type), 0)
    if n_wt == 0:
        return None
    return _pmi_value(n_wt, n_w, counts.n_by_type[dep_type], counts.n_sentences)


def direction_dependency_score(word: str, counts: TypeCounts) -> float:
    """Signed association strength; positive means proportional type.

    The PMI comparison is decided on integer cross-products
    (n_wp * n_i vs. n_wi * n_p), so exact ties yield exactly 0.0.
    """
    n_w = counts.n_word.get(word, 0)
    if n_w == 0:
        raise UnknownWord(word)
    n = counts.n_sentences
    n_p = counts.n_by_type[_P]
    n_i = counts.n_by_type[_I]
    n_wp = counts.n_word_type.get((word, _P), 0)
    n_wi = counts.n_word_type.get((word, _I), 0)
    if n_wp > 0 and n_wi > 0:
        lhs = n_wp * n_i
        rhs = n_wi * n_p
        if lhs > rhs:
            return abs(_pmi_value(n_wp, n_w, n_p, n))
        if lhs < rhs:
            return -abs(_pmi_value(n_wi, n_w, n_i, n))
        return 0.0
    if n_wp > 0:
        return abs(_pmi_value(n_wp, n_w, n_p, n))
    return -abs(_pmi_value(n_wi, n_w, n_i, n))


@dataclass(frozen=True)
class DirectionDependencyScoreTable:
    """Scores for every counted lemma; the sign encodes the candidate type."""

    scores: Mapping[str, float]

    def candidate_type(self, word: str) -> DirectionDependencyType | None:
        score = self.scores[word]
        if score > 0:
            return _P
        if score < 0:
            return _I
        return None


def score_table(counts: TypeCounts) -> DirectionDependencyScoreTable:
    return DirectionDependencyScoreTable(
        scores={w: direction_dependency_score(w, counts) for w in counts.n_word}
    )


def extract_representatives(
    tagged: Sequence[TaggedSentence],
    table: DirectionDependencyScoreTable,
    candidates_by_sentence: Mapping[int, Iterable[str]],
) -> tuple[frozenset[str], frozenset[str]]:
    """Pick one representative direction-dependent word per tagged sentence.

    Proportional sentences contribute their highest positive-scoring
    candidate, inversely proportional ones their lowest negative-scoring
    candidate; score ties break to the lexicographically smallest lemma.
    Sentences with no same-sign candidate contribute nothing.
    """
    proportional: set[str] = set()
    inverse: set[str] = set()
    for tag in tagged:
        scored = [
            (table.scores[w], w)
            for w in candidates_by_sentence.get(tag.sentence_id, ())
            if w in table.scores
        ]
        if tag.dep_type is _P:
            pool = [(s, w) for s, w in scored if s > 0]
            if pool:
                proportional.add(min(pool, key=lambda item: (-item[0], item[1]))[1])
        else:
            pool = [(s, w) for s, w in scored if s < 0]
            if pool:
                inverse.add(min(pool, key=lambda item: (item[0], item[1]))[1])
    return frozenset(proportional), frozenset(inverse)


@dataclass(frozen=True)
class SentiDDLexicon:
    """Context pairs of (directional word, direction-dependent lemma).

    Positive pairs are up x proportional and down x inverse; negative
    pairs are up x inverse and down x proportional.
    """

    up_words: frozenset[str]
    down_words: frozenset[str]
    proportional_words: frozenset[str]
    inverse_words: frozenset[str]
    positive_pairs: frozenset[tuple[str, str]]
    negative_pairs: frozenset[tuple[str, str]]

    def __post_init__(self):
        if self.proportional_words & self.inverse_words:
            raise OverlappingTypes(self.proportional_words & self.inverse_words)
        expected_pos = len(self.up_words) * len(self.proportional_words) + len(
            self.down_words
        ) * len(self.inverse_words)
        expected_neg = len(self.up_words) * len(self.inverse_words) + len(
            self.down_words
        ) * len(self.proportional_words)
        if len(self.positive_pairs) != expected_pos or len(self.negative_pairs) != expected_neg:
            raise LexiconFormatError("pair sets are not full cross products")
        if self.positive_pairs & self.negative_pairs:
            raise LexiconFormatError("positive and negative pair sets overlap")

    @classmethod
    def empty(cls) -> "SentiDDLexicon":
        return cls(
            up_words=frozenset(),
            down_words=frozenset(),
            proportional_words=frozenset(),
            inverse_words=frozenset(),
            positive_pairs=frozenset(),
            negative_pairs=frozenset(),
        )

    def to_json(self) -> str:
        return json.dumps(
            {
                "proportional": sorted(self.proportional_words),
                "inverse": sorted(self.inverse_words),
                "up": sorted(self.up_words),
                "down": sorted(self.down_words),
            },
            indent=2,
            sort_keys=True,
        ) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "SentiDDLexicon":
        try:
            obj = json.loads(text)
            up = obj["up"]
            down = obj["down"]
            proportional = obj["proportional"]
            inverse = obj["inverse"]
        except (json.JSONDecodeError, TypeError, KeyError) as exc:
            raise LexiconFormatError(f"invalid pair-lexicon JSON: {exc}") from exc
        dir_lex = DirectionalLexicon.from_words(up, down)
        return build_senti_dd(dir_lex, proportional, inverse)

    @classmethod
    def from_file(cls, path: str | Path) -> "SentiDDLexicon":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))


def build_senti_dd(
    directional: DirectionalLexicon,
    proportional_words: Iterable[str],
    inverse_words: Iterable[str],
) -> SentiDDLexicon:
    """Cross directional words with dependent words into context pairs."""
    proportional = frozenset(proportional_words)
    inverse = frozenset(inverse_words)
    if proportional & inverse:
        raise OverlappingTypes(proportional & inverse)
    up = directional.up_words
    down = directional.down_words
    positive = {(d, w) for d in up for w in proportional} | {
        (d, w) for d in down for w in inverse
    }
    negative = {(d, w) for d in up for w in inverse} | {
        (d, w) for d in down for w in proportional
    }
    return SentiDDLexicon(
        up_words=up,
        down_words=down,
        proportional_words=proportional,
        inverse_words=inverse,
        positive_pairs=frozenset(positive),
        negative_pairs=frozenset(negative),
    )


@dataclass(frozen=True)
class BuildResult:
    """Everything produced by a lexicon build, for inspection and reports."""

    lexicon: SentiDDLexicon
    tagged: tuple[TaggedSentence, ...]
    vocab: VocabStats
    counts: TypeCounts
    table: DirectionDependencyScoreTable

    @property
    def n_proportional(self) -> int:
        return sum(1 for t in self.tagged if t.dep_type is _P)

    @property
    def n_inverse(self) -> int:
        return sum(1 for t in self.tagged if t.dep_type is _I)


def build_lexicon(
    sentences,
    tokenized: Sequence[TokenizedSentence],
    directional: DirectionalLexicon,
    min_count: int = DEFAULT_MIN_COUNT,
    min_length: int = DEFAULT_MIN_LENGTH,
) -> BuildResult:
    """Run the full construction pipeline over already-tokenized sentences.

    Tags polar sentences, builds the candidate vocabulary over the tagged
    sentences, scores word/type association, extracts representatives and
    assembles the pair lexicon. Raises EmptyTagSet when nothing is tagged.
    """
    tagged = tag_corpus(sentences, tokenized, directional)
    if not tagged:
        raise EmptyTagSet("no sentence received a direction-dependency tag")
    by_id = {ts.sentence_id: ts for ts in tokenized}
    tagged_tokenized = [by_id[t.sentence_id] for t in tagged]
    vocab = build_vocab(tagged_tokenized, min_count=min_count, min_length=min_length)
    candidates_by_sentence = {ts.sentence_id: ts.candidates for ts in tagged_tokenized}
    counts = count_cooccurrence(tagged, candidates_by_sentence, vocab)
    table = score_table(counts)
    proportional, inverse = extract_representatives(tagged, table, candidates_by_sentence)
    lexicon = build_senti_dd(directional, proportional, inverse)
    return BuildResult(
        lexicon=lexicon,
        tagged=tuple(tagged),
        vocab=vocab,
        counts=counts,
        table=table,
    )


def build_from_dataset(
    dataset: Dataset,
    directional: DirectionalLexicon | None = None,
    preprocessor: Preprocessor | None = None,
    min_count: int = DEFAULT_MIN_COUNT,
    min_length: int = DEFAULT_MIN_LENGTH,
) -> BuildResult:
    """Convenience wrapper: tokenize a whole dataset and build from it."""
    directional = directional or DirectionalLexicon.default()
    preprocessor = preprocessor or Preprocessor(directional)
    tokenized = preprocessor.process_all(dataset.sentences)
    return build_lexicon(
        dataset.sentences, tokenized, directional, min_count=min_count, min_length=min_length
    )
