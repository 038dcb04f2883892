"""Context-aware financial sentiment lexicon construction and
lexicon-based sentiment classification.

The pipeline mines direction-dependent words from a labeled sentence
corpus via pointwise mutual information between words and
direction-dependency types, pairs them with directional ("up"/"down")
words into a context lexicon, and uses that lexicon to refine unigram
sentiment scores for three-class classification.
"""

__version__ = "0.1.0"

from .builder import (
    BuildResult,
    DirectionDependencyScoreTable,
    SentiDDLexicon,
    TypeCounts,
    build_from_dataset,
    build_lexicon,
    build_senti_dd,
    count_cooccurrence,
    direction_dependency_score,
    extract_representatives,
    pmi,
    score_table,
)
from .classifier import (
    SentimentDecision,
    UnigramLexicon,
    base_score,
    classify,
    context_score,
    decide,
    decide_all,
    decisions_to_jsonl,
    refine,
)
from .corpus import (
    Dataset,
    FoldSplit,
    Label,
    LabeledSentence,
    parse_phrasebank,
    read_phrasebank,
    stratified_folds,
    to_phrasebank_text,
)
from .direction import (
    DirectionalLexicon,
    DirectionDependencyType,
    TaggedSentence,
    direction_score,
    tag_corpus,
    tag_sentence,
)
from .errors import (
    EmptyCorpus,
    EmptyTagSet,
    LexiconFormatError,
    MalformedLine,
    OverlappingTypes,
    SentiDDError,
    TooFewSamples,
    UnknownWord,
)
from .evaluation import (
    ClassMetrics,
    ConfusionCounts,
    EvalReport,
    METHOD_LM,
    METHOD_LM_SENTIDD,
    metrics,
    per_class_csv,
    replicate_full_build,
    run_cv,
    summary_csv,
)
from .porter import stem
from .textprep import (
    CandidateFilter,
    Preprocessor,
    TokenizedSentence,
    VocabStats,
    build_vocab,
    extract_candidates,
    lemmatize_noun,
    load_irregular_nouns,
    load_stopwords,
    make_candidate_filter,
    tokenize,
)

__all__ = [
    "__version__",
    "BuildResult",
    "CandidateFilter",
    "ClassMetrics",
    "ConfusionCounts",
    "Dataset",
    "DirectionDependencyScoreTable",
    "DirectionDependencyType",
    "DirectionalLexicon",
    "EmptyCorpus",
    "EmptyTagSet",
    "EvalReport",
    "FoldSplit",
    "Label",
    "LabeledSentence",
    "LexiconFormatError",
    "MalformedLine",
    "METHOD_LM",
    "METHOD_LM_SENTIDD",
    "OverlappingTypes",
    "Preprocessor",
    "SentiDDError",
    "SentiDDLexicon",
    "SentimentDecision",
    "TaggedSentence",
    "TokenizedSentence",
    "TooFewSamples",
    "TypeCounts",
    "UnigramLexicon",
    "UnknownWord",
    "VocabStats",
    "base_score",
    "build_from_dataset",
    "build_lexicon",
    "build_senti_dd",
    "build_vocab",
    "classify",
    "context_score",
    "count_cooccurrence",
    "decide",
    "decide_all",
    "decisions_to_jsonl",
    "direction_dependency_score",
    "direction_score",
    "extract_candidates",
    "extract_representatives",
    "lemmatize_noun",
    "load_irregular_nouns",
    "load_stopwords",
    "make_candidate_filter",
    "metrics",
    "parse_phrasebank",
    "per_class_csv",
    "pmi",
    "read_phrasebank",
    "refine",
    "replicate_full_build",
    "run_cv",
    "score_table",
    "stem",
    "stratified_folds",
    "summary_csv",
    "tag_corpus",
    "tag_sentence",
    "to_phrasebank_text",
    "tokenize",
]
