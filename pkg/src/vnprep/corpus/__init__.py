"""Corpus ingestion, file formats, near-duplicate removal, split statistics."""

from .dedup import (
    MinHashSignature,
    RemovedDoc,
    ShingleSet,
    dedup_corpus,
    minhash_signature,
    shingle_document,
    write_dedup_report,
)
from .io import (
    CORPUS_FORMATS,
    NLI_LABELS,
    DecodeFailure,
    Document,
    read_bio,
    read_conllu,
    read_corpus,
    read_sentence_pairs,
    read_tagged,
    write_bio,
    write_conllu,
    write_corpus,
    write_sentence_pairs,
    write_tagged,
)
from .stats import BENCHMARK_SPLITS, DatasetStats, StatsReport, Task, validate_split_stats

__all__ = [
    "BENCHMARK_SPLITS",
    "CORPUS_FORMATS",
    "DatasetStats",
    "DecodeFailure",
    "Document",
    "MinHashSignature",
    "NLI_LABELS",
    "RemovedDoc",
    "ShingleSet",
    "StatsReport",
    "Task",
    "dedup_corpus",
    "minhash_signature",
    "read_bio",
    "read_conllu",
    "read_corpus",
    "read_sentence_pairs",
    "read_tagged",
    "shingle_document",
    "validate_split_stats",
    "write_bio",
    "write_conllu",
    "write_corpus",
    "write_dedup_report",
    "write_sentence_pairs",
    "write_tagged",
]
