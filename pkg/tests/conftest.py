"""Shared fixtures: lexicons, toy corpora, and a synthetic corpus generator.

The synthetic corpus imitates the structure of financial news headlines
(directional verbs applied to metric words, plus neutral factual
sentences) so that lexicon construction has signal to find. It is used
by tests that need a corpus when no real data files are available.
"""

from __future__ import annotations

import random

import pytest

from sentidd import (
    Dataset,
    DirectionalLexicon,
    Label,
    LabeledSentence,
    Preprocessor,
    UnigramLexicon,
    parse_phrasebank,
)

PROPORTIONAL_METRICS = [
    "profit",
    "revenue",
    "margin",
    "turnover",
    "output",
    "demand",
    "backlog",
    "volume",
]
INVERSE_METRICS = ["cost", "expense", "debt", "wastage"]
UP_VERBS = ["rose", "increased", "grew", "climbed", "jumped"]
DOWN_VERBS = ["fell", "decreased", "declined", "dropped", "weakened"]
COMPANIES = ["Altia", "Borealis", "Cencorp", "Detection", "Elcoteq", "Finnlines"]
POSITIVE_FILLERS = ["excellent", "beneficial", "strong"]
NEGATIVE_FILLERS = ["adverse", "weak", "poor"]


def make_synthetic_corpus(n: int, seed: int, name: str = "synthetic") -> Dataset:
    """Deterministic labeled corpus with directional structure.

    Roughly 30% positive, 15% negative, 55% neutral, echoing the skew of
    financial news corpora.
    """
    rng = random.Random(seed)
    sentences = []
    for i in range(n):
        roll = rng.random()
        company = rng.choice(COMPANIES)
        if roll < 0.30:
            metric = rng.choice(PROPORTIONAL_METRICS)
            if rng.random() < 0.85:
                verb = rng.choice(UP_VERBS)
                label = Label.POSITIVE
            else:
                verb = rng.choice(DOWN_VERBS)
                label = Label.NEGATIVE
            pct = rng.randint(1, 40)
            text = f"{company} {metric} {verb} by {pct}.{rng.randint(0,9)} % in the quarter ."
            if rng.random() < 0.25:
                filler = (
                    rng.choice(POSITIVE_FILLERS)
                    if label is Label.POSITIVE
                    else rng.choice(NEGATIVE_FILLERS)
                )
                text = f"{company} reported {filler} figures as {metric} {verb} by {pct} % ."
        elif roll < 0.45:
            metric = rng.choice(INVERSE_METRICS)
            if rng.random() < 0.7:
                verb = rng.choice(DOWN_VERBS)
                label = Label.POSITIVE
            else:
                verb = rng.choice(UP_VERBS)
                label = Label.NEGATIVE
            text = f"Unit {metric} for {company} operations {verb} by {rng.randint(1, 15)} percent ."
        else:
            label = Label.NEUTRAL
            kind = rng.randint(0, 2)
            if kind == 0:
                text = (
                    f"{company} operates {rng.randint(2, 12)} plants in "
                    f"{rng.choice(['Finland', 'Sweden', 'Estonia', 'Poland'])} ."
                )
            elif kind == 1:
                text = f"The {rng.choice(['board', 'group', 'unit'])} of {company} met on Tuesday ."
            else:
                metric = rng.choice(PROPORTIONAL_METRICS + INVERSE_METRICS)
                text = f"{company} {metric} totalled EUR {rng.randint(1, 900)} mn ."
        sentences.append(LabeledSentence(id=i, text=text, label=label))
    return Dataset(name=name, sentences=tuple(sentences))


TINY_CORPUS = """Profit rose clearly .@positive
Costs fell considerably .@positive
Profit fell sharply .@negative
"""


@pytest.fixture(scope="session")
def dir_lex() -> DirectionalLexicon:
    return DirectionalLexicon.default()


@pytest.fixture(scope="session")
def prep(dir_lex) -> Preprocessor:
    return Preprocessor(dir_lex)


@pytest.fixture(scope="session")
def tiny_dataset() -> Dataset:
    return parse_phrasebank(TINY_CORPUS, name="tiny")


@pytest.fixture(scope="session")
def synthetic_dataset() -> Dataset:
    return make_synthetic_corpus(600, seed=7)


@pytest.fixture(scope="session")
def simple_unigrams() -> UnigramLexicon:
    return UnigramLexicon(
        positive=frozenset(POSITIVE_FILLERS) | {"good", "profitable"},
        negative=frozenset(NEGATIVE_FILLERS) | {"bad", "unprofitable"},
    )
