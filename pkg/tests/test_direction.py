import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sentidd import (
    DirectionalLexicon,
    DirectionDependencyType,
    Label,
    LabeledSentence,
    LexiconFormatError,
    TaggedSentence,
    direction_score,
    parse_phrasebank,
    tag_corpus,
    tag_sentence,
)

P = DirectionDependencyType.PROPORTIONAL
I = DirectionDependencyType.INVERSELY_PROPORTIONAL


class TestDirectionalLexicon:
    def test_default_counts(self, dir_lex):
        assert len(dir_lex.up_words) == 20
        assert len(dir_lex.down_words) == 11
        assert len(dir_lex.up_stems) == 20
        assert len(dir_lex.down_stems) == 11

    def test_stem_sets_disjoint(self, dir_lex):
        assert not dir_lex.up_stems & dir_lex.down_stems

    def test_from_text(self):
        lex = DirectionalLexicon.from_text("[up]\nrise\n# comment\n[down]\nfall\n")
        assert lex.up_words == frozenset({"rise"})
        assert lex.down_words == frozenset({"fall"})

    def test_word_before_header_rejected(self):
        with pytest.raises(LexiconFormatError):
            DirectionalLexicon.from_text("rise\n[up]\n")

    def test_unknown_section_rejected(self):
        with pytest.raises(LexiconFormatError):
            DirectionalLexicon.from_text("[sideways]\nflat\n")

    def test_empty_rejected(self):
        with pytest.raises(LexiconFormatError):
            DirectionalLexicon.from_text("[up]\n[down]\n")

    def test_overlapping_stems_rejected(self):
        # "rises" stems to "rise", colliding with the up-list entry
        with pytest.raises(LexiconFormatError):
            DirectionalLexicon.from_words(["rise"], ["rises", "fall"])


class TestDirectionScore:
    def test_up_word(self, prep, dir_lex):
        ts = prep.process(0, "Operating loss increased to EUR 17 mn from a loss of EUR 10.8 mn in 2005 .")
        assert direction_score(ts, dir_lex) == 1

    def test_down_word(self, prep, dir_lex):
        ts = prep.process(0, "Unit costs for flight operations fell by 6.4 percent .")
        assert direction_score(ts, dir_lex) == -1

    def test_no_directional_stems(self, prep, dir_lex):
        ts = prep.process(0, "The company is based in Helsinki .")
        assert direction_score(ts, dir_lex) == 0

    def test_occurrences_count_multiply(self, prep, dir_lex):
        ts = prep.process(0, "Sales went up and margins went up .")
        assert direction_score(ts, dir_lex) == 2

    def test_inflections_match_at_stem_level(self, prep, dir_lex):
        ts = prep.process(0, "Orders were rising while costs were dropping .")
        assert direction_score(ts, dir_lex) == 0  # one up stem, one down stem


class TestTagSentence:
    def _sentence(self, label):
        return LabeledSentence(id=0, text="x y", label=label)

    @pytest.mark.parametrize(
        "label,score,expected",
        [
            (Label.POSITIVE, 1, P),
            (Label.NEGATIVE, -1, P),
            (Label.POSITIVE, -2, I),
            (Label.NEGATIVE, 3, I),
        ],
    )
    def test_rule_table(self, label, score, expected):
        tag = tag_sentence(self._sentence(label), score)
        assert tag is not None
        assert tag.dep_type is expected

    def test_neutral_never_tagged(self):
        assert tag_sentence(self._sentence(Label.NEUTRAL), 5) is None

    def test_zero_score_never_tagged(self):
        assert tag_sentence(self._sentence(Label.POSITIVE), 0) is None

    def test_invariants_enforced_on_construction(self):
        with pytest.raises(ValueError):
            TaggedSentence(sentence_id=0, label=Label.POSITIVE, direction_score=1, dep_type=I)
        with pytest.raises(ValueError):
            TaggedSentence(sentence_id=0, label=Label.NEUTRAL, direction_score=1, dep_type=P)
        with pytest.raises(ValueError):
            TaggedSentence(sentence_id=0, label=Label.POSITIVE, direction_score=0, dep_type=P)


class TestTagCorpus:
    def test_two_sentence_toy(self, prep, dir_lex):
        ds = parse_phrasebank("profit up@positive\nprofit up@negative")
        tags = tag_corpus(ds.sentences, prep.process_all(ds.sentences), dir_lex)
        assert [t.dep_type for t in tags] == [P, I]
        assert [t.sentence_id for t in tags] == [0, 1]

    def test_all_neutral_gives_empty(self, prep, dir_lex):
        ds = parse_phrasebank("profit up@neutral\ncosts fell@neutral")
        assert tag_corpus(ds.sentences, prep.process_all(ds.sentences), dir_lex) == []

    def test_tagged_subset_of_polar(self, prep, dir_lex, synthetic_dataset):
        tokenized = prep.process_all(synthetic_dataset.sentences)
        tags = tag_corpus(synthetic_dataset.sentences, tokenized, dir_lex)
        polar = sum(1 for s in synthetic_dataset if s.label is not Label.NEUTRAL)
        assert 0 < len(tags) <= polar

    def test_misaligned_tokenization_rejected(self, prep, dir_lex):
        ds = parse_phrasebank("profit up@positive")
        wrong = prep.process(3, "profit up")
        with pytest.raises(ValueError):
            tag_corpus(ds.sentences, [wrong], dir_lex)


_polar = st.sampled_from([Label.POSITIVE, Label.NEGATIVE])
_score = st.integers(-4, 4)


class TestTagProperties:
    @given(label=_polar, score=_score)
    @settings(max_examples=100)
    def test_label_antisymmetry(self, label, score):
        flipped = Label.NEGATIVE if label is Label.POSITIVE else Label.POSITIVE
        a = tag_sentence(LabeledSentence(0, "x", label), score)
        b = tag_sentence(LabeledSentence(0, "x", flipped), score)
        if score == 0:
            assert a is None and b is None
        else:
            assert a.dep_type is not b.dep_type

    @given(label=_polar, score=_score)
    @settings(max_examples=100)
    def test_score_negation_flips_type(self, label, score):
        a = tag_sentence(LabeledSentence(0, "x", label), score)
        b = tag_sentence(LabeledSentence(0, "x", label), -score)
        if score == 0:
            assert a is None and b is None
        else:
            assert a.dep_type is not b.dep_type

    def test_lexicon_swap_negates_scores(self, prep, dir_lex):
        swapped = DirectionalLexicon.from_words(dir_lex.down_words, dir_lex.up_words)
        for text in [
            "profit rose sharply",
            "costs fell by a fifth",
            "output doubled as demand grew",
            "nothing directional here",
        ]:
            ts = prep.process(0, text)
            assert direction_score(ts, swapped) == -direction_score(ts, dir_lex)
