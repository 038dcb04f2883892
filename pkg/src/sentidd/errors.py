"""Exception types shared across the package."""


class SentiDDError(Exception):
    """Base class for all errors raised by this package."""


class MalformedLine(SentiDDError):
    """A corpus line is missing the separator or carries an unknown label."""

    def __init__(self, line_no: int, reason: str = ""):
        self.line_no = line_no
        self.reason = reason
        msg = f"malformed corpus line {line_no}"
        if reason:
            msg += f": {reason}"
        super().__init__(msg)


class EmptyCorpus(SentiDDError):
    """The corpus contains no usable sentences."""


class TooFewSamples(SentiDDError):
    """A label class has fewer members than the requested fold count."""

    def __init__(self, label, count: int, k: int):
        self.label = label
        self.count = count
        self.k = k
        super().__init__(
            f"class {label} has {count} sentence(s), fewer than k={k} folds"
        )


class EmptyTagSet(SentiDDError):
    """No sentence received a direction-dependency tag."""


class UnknownWord(SentiDDError):
    """The word never occurs in the counted corpus."""

    def __init__(self, word: str):
        self.word = word
        super().__init__(f"word {word!r} has no occurrences in the tagged corpus")


class OverlappingTypes(SentiDDError):
    """A lemma was assigned to both direction-dependency types."""

    def __init__(self, overlap):
        self.overlap = sorted(overlap)
        super().__init__(
            f"lemmas assigned to both types: {', '.join(self.overlap)}"
        )


class LexiconFormatError(SentiDDError):
    """A lexicon file is malformed or violates a lexicon invariant."""
