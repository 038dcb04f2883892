import json
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sentidd import (
    Dataset,
    EmptyCorpus,
    FoldSplit,
    Label,
    LabeledSentence,
    MalformedLine,
    TooFewSamples,
    parse_phrasebank,
    read_phrasebank,
    stratified_folds,
    to_phrasebank_text,
)


class TestParse:
    def test_basic_line(self):
        ds = parse_phrasebank("Profit rose clearly .@positive")
        assert len(ds) == 1
        assert ds.sentences[0].text == "Profit rose clearly ."
        assert ds.sentences[0].label is Label.POSITIVE

    def test_last_separator_wins(self):
        ds = parse_phrasebank("a@b@neutral")
        assert ds.sentences[0].text == "a@b"
        assert ds.sentences[0].label is Label.NEUTRAL

    def test_missing_separator(self):
        with pytest.raises(MalformedLine) as exc_info:
            parse_phrasebank("no separator line")
        assert exc_info.value.line_no == 1

    def test_unknown_label(self):
        with pytest.raises(MalformedLine) as exc_info:
            parse_phrasebank("fine@positive\nbroken@meh")
        assert exc_info.value.line_no == 2

    def test_label_case_insensitive(self):
        ds = parse_phrasebank("ok@Positive\nalso ok@NEGATIVE\nmeh@Neutral")
        assert [s.label for s in ds] == [Label.POSITIVE, Label.NEGATIVE, Label.NEUTRAL]

    def test_blank_lines_skipped_and_ids_contiguous(self):
        ds = parse_phrasebank("\na@positive\n\nb@negative\n\n")
        assert [s.id for s in ds] == [0, 1]

    def test_empty_corpus(self):
        with pytest.raises(EmptyCorpus):
            parse_phrasebank("\n\n  \n")

    def test_empty_sentence_is_malformed(self):
        with pytest.raises(MalformedLine):
            parse_phrasebank("@positive")

    def test_custom_separator(self):
        ds = parse_phrasebank("uses at @ inside\tpositive", separator="\t")
        assert ds.sentences[0].text == "uses at @ inside"

    def test_latin1_fallback(self, tmp_path):
        path = tmp_path / "latin1.txt"
        path.write_bytes("Pörssi rose .@positive\n".encode("latin-1"))
        ds = read_phrasebank(path)
        assert ds.sentences[0].text == "Pörssi rose ."

    def test_label_proportions(self):
        ds = parse_phrasebank("a@positive\nb@positive\nc@negative\nd@neutral")
        assert ds.label_proportions()[Label.POSITIVE] == pytest.approx(0.5)


_TEXT = st.text(
    st.characters(blacklist_categories=("Cs",), blacklist_characters="\n\r"),
    min_size=1,
    max_size=40,
).filter(lambda s: s.strip() == s and s)


class TestRoundTrip:
    @given(
        st.lists(
            st.tuples(_TEXT, st.sampled_from(list(Label))), min_size=1, max_size=30
        )
    )
    @settings(max_examples=100)
    def test_serialize_parse_round_trip(self, rows):
        ds = Dataset(
            name="rt",
            sentences=tuple(
                LabeledSentence(id=i, text=t, label=l) for i, (t, l) in enumerate(rows)
            ),
        )
        again = parse_phrasebank(to_phrasebank_text(ds), name="rt")
        assert again == ds


class TestStratifiedFolds:
    def _dataset(self, labels):
        return Dataset(
            name="toy",
            sentences=tuple(
                LabeledSentence(id=i, text=f"s{i}", label=l) for i, l in enumerate(labels)
            ),
        )

    def test_exact_divisibility(self):
        ds = self._dataset([Label.POSITIVE] * 6 + [Label.NEGATIVE] * 4)
        split = stratified_folds(ds, k=2, seed=0)
        for fold in split.folds:
            labels = Counter(ds.sentences[i].label for i in fold)
            assert labels[Label.POSITIVE] == 3
            assert labels[Label.NEGATIVE] == 2

    def test_all_neutral_k5(self):
        ds = self._dataset([Label.NEUTRAL] * 5)
        split = stratified_folds(ds, k=5, seed=1)
        assert all(len(fold) == 1 for fold in split.folds)

    def test_too_few_samples(self):
        ds = self._dataset([Label.POSITIVE] * 5 + [Label.NEGATIVE])
        with pytest.raises(TooFewSamples):
            stratified_folds(ds, k=2, seed=0)

    def test_same_seed_identical(self):
        ds = self._dataset([Label.POSITIVE] * 13 + [Label.NEGATIVE] * 7 + [Label.NEUTRAL] * 9)
        a = stratified_folds(ds, k=4, seed=99)
        b = stratified_folds(ds, k=4, seed=99)
        assert a.to_json() == b.to_json()

    def test_k_below_two_rejected(self):
        ds = self._dataset([Label.POSITIVE] * 4)
        with pytest.raises(ValueError):
            stratified_folds(ds, k=1, seed=0)

    @given(
        counts=st.tuples(
            st.one_of(st.just(0), st.integers(2, 40)),
            st.one_of(st.just(0), st.integers(2, 40)),
            st.one_of(st.just(0), st.integers(2, 40)),
        ),
        k=st.integers(2, 6),
        seed=st.integers(0, 2**20),
    )
    @settings(max_examples=100)
    def test_partition_and_stratification_invariants(self, counts, k, seed):
        labels = (
            [Label.POSITIVE] * counts[0]
            + [Label.NEGATIVE] * counts[1]
            + [Label.NEUTRAL] * counts[2]
        )
        if not labels or any(0 < c < k for c in counts):
            return
        ds = self._dataset(labels)
        split = stratified_folds(ds, k=k, seed=seed)

        all_ids = [i for fold in split.folds for i in fold]
        assert sorted(all_ids) == list(range(len(ds)))

        for label, total in zip(Label, counts):
            ideal = total / k
            for fold in split.folds:
                got = sum(1 for i in fold if ds.sentences[i].label is label)
                assert abs(got - ideal) <= 1


class TestFoldSplit:
    def test_json_round_trip(self):
        split = FoldSplit(k=2, seed=5, folds=((0, 2), (1, 3)))
        again = FoldSplit.from_json(split.to_json())
        assert again == split
        manifest = json.loads(split.to_json())
        assert manifest == {"k": 2, "seed": 5, "folds": [[0, 2], [1, 3]]}

    def test_train_test_ids(self):
        split = FoldSplit(k=3, seed=0, folds=((0, 1), (2, 3), (4,)))
        assert split.test_ids(1) == (2, 3)
        assert set(split.train_ids(1)) == {0, 1, 4}

    def test_invalid_partitions_rejected(self):
        with pytest.raises(ValueError):
            FoldSplit(k=2, seed=0, folds=((0, 1), (1, 2)))
        with pytest.raises(ValueError):
            FoldSplit(k=2, seed=0, folds=((0,), (2,)))
