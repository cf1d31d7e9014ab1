"""Near-duplicate removal over a document stream.

Shingle each document into hashed k-token windows, summarize the shingle
set with a MinHash signature, and drop any document whose estimated
Jaccard similarity to an already-kept document reaches the threshold.
Byte-identical documents are always dropped via an exact content hash,
independent of the threshold.
"""

from __future__ import annotations

import hashlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from ..errors import UsageError
from .io import Document

_U64 = np.uint64
_MASK64 = (1 << 64) - 1
_EMPTY_SLOT = _MASK64  # sentinel signature value for shingle-less documents


def _splitmix64(seed: int) -> Iterator[int]:
    """Deterministic 64-bit value stream used to derive hash parameters."""
    state = seed & _MASK64
    while True:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        yield z ^ (z >> 31)


def _hash_family(num_hashes: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    """Multipliers (forced odd) and offsets of the affine 64-bit hash family."""
    gen = _splitmix64(seed)
    a = np.array([next(gen) | 1 for _ in range(num_hashes)], dtype=_U64)
    b = np.array([next(gen) for _ in range(num_hashes)], dtype=_U64)
    return a, b


def _hash_window(tokens: tuple[str, ...]) -> int:
    digest = hashlib.blake2b("\x1f".join(tokens).encode("utf-8"), digest_size=8)
    return int.from_bytes(digest.digest(), "big")


@dataclass(frozen=True)
class ShingleSet:
    """Hashed k-token windows of one document (set semantics)."""

    doc_id: str
    shingles: frozenset[int]

    @property
    def empty(self) -> bool:
        return not self.shingles


def shingle_document(doc: Document, k: int) -> ShingleSet:
    """All contiguous k-token windows of the document, hashed to 64 bits.

    Tokens are the whitespace-delimited units of the text. Documents with
    fewer than k tokens yield an empty set.
    """
    if k < 1:
        raise UsageError(f"shingle size must be >= 1, got {k}")
    tokens = doc.text.split()
    windows = {
        _hash_window(tuple(tokens[i : i + k])) for i in range(len(tokens) - k + 1)
    }
    return ShingleSet(doc_id=doc.id, shingles=frozenset(windows))


@dataclass(eq=False)
class MinHashSignature:
    """Per-hash minima over a shingle set.

    ``flagged`` marks signatures of empty shingle sets (every slot is the
    max 64-bit value); such signatures must not be used for similarity
    estimation.
    """

    doc_id: str
    values: np.ndarray  # uint64, shape (num_hashes,)
    flagged: bool = False

    def match_fraction(self, other: "MinHashSignature") -> float:
        """Fraction of matching slots; estimates Jaccard similarity."""
        if len(self.values) != len(other.values):
            raise UsageError("signatures have different num_hashes")
        return float(np.mean(self.values == other.values))


def minhash_signature(
    shingles: ShingleSet, num_hashes: int, seed: int
) -> MinHashSignature:
    """MinHash signature: slot i is min over shingles of hash_i(shingle).

    Deterministic for a fixed (shingles, num_hashes, seed). An empty
    shingle set yields the flagged all-max sentinel signature.
    """
    if num_hashes < 1:
        raise UsageError(f"num_hashes must be >= 1, got {num_hashes}")
    if shingles.empty:
        values = np.full(num_hashes, _EMPTY_SLOT, dtype=_U64)
        return MinHashSignature(shingles.doc_id, values, flagged=True)
    a, b = _hash_family(num_hashes, seed)
    sh = np.array(sorted(shingles.shingles), dtype=_U64)
    with np.errstate(over="ignore"):
        # uint64 arithmetic wraps mod 2^64, which is exactly the family.
        hashed = a[:, None] * sh[None, :] + b[:, None]
    return MinHashSignature(shingles.doc_id, hashed.min(axis=1))


class RemovedDoc(NamedTuple):
    dropped_id: str
    kept_id: str
    similarity: float


@dataclass
class _KeptIndex:
    """Signatures of kept documents, grown incrementally."""

    num_hashes: int
    ids: list[str] = field(default_factory=list)
    rows: list[np.ndarray] = field(default_factory=list)
    _matrix: np.ndarray | None = None
    _fresh: int = 0

    def add(self, sig: MinHashSignature) -> None:
        self.ids.append(sig.doc_id)
        self.rows.append(sig.values)
        self._fresh += 1

    def best_match(self, sig: MinHashSignature) -> tuple[str, float] | None:
        if not self.ids:
            return None
        if self._fresh:
            self._matrix = np.vstack(self.rows)
            self._fresh = 0
        matches = np.mean(self._matrix == sig.values[None, :], axis=1)
        best = int(np.argmax(matches))  # earliest kept doc wins ties
        return self.ids[best], float(matches[best])


def dedup_corpus(
    docs: Iterable[Document],
    *,
    k: int = 5,
    threshold: float = 0.8,
    num_hashes: int = 256,
    seed: int = 0,
    removed: list[RemovedDoc] | None = None,
    threads: int = 1,
) -> Iterator[Document]:
    """Yield first-seen representatives, dropping exact and near duplicates.

    A document is dropped when it is byte-identical to a kept document
    (similarity reported as 1.0, regardless of threshold) or when its
    estimated Jaccard similarity to some kept document is >= threshold.
    Records of dropped documents are appended to ``removed`` if given.

    Documents too short to produce shingles (< k tokens) are only subject
    to exact dedup. Signature computation is pure per document and runs on
    ``threads`` workers; results are independent of the thread count.
    Memory holds one signature per kept document, never document texts.
    """
    if not 0.0 < threshold <= 1.0:
        raise UsageError(f"threshold must be in (0, 1], got {threshold}")
    if k < 1:
        raise UsageError(f"shingle size must be >= 1, got {k}")

    exact_seen: dict[bytes, str] = {}
    index = _KeptIndex(num_hashes)

    def signature(doc: Document) -> MinHashSignature:
        return minhash_signature(shingle_document(doc, k), num_hashes, seed)

    def decide(doc: Document, sig: MinHashSignature) -> Document | None:
        content = hashlib.blake2b(doc.text.encode("utf-8"), digest_size=16).digest()
        prior = exact_seen.get(content)
        if prior is not None:
            if removed is not None:
                removed.append(RemovedDoc(doc.id, prior, 1.0))
            return None
        if not sig.flagged:
            hit = index.best_match(sig)
            if hit is not None and hit[1] >= threshold:
                if removed is not None:
                    removed.append(RemovedDoc(doc.id, hit[0], hit[1]))
                return None
            index.add(sig)
        exact_seen[content] = doc.id
        return doc

    if threads <= 1:
        for doc in docs:
            kept = decide(doc, signature(doc))
            if kept is not None:
                yield kept
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            # Signatures per chunk in parallel (map preserves order);
            # grouping stays a sequential reduction, so output is
            # independent of the thread count. Memory: one chunk of texts.
            for chunk in _chunks(docs, 16 * threads):
                for doc, sig in zip(chunk, pool.map(signature, chunk)):
                    kept = decide(doc, sig)
                    if kept is not None:
                        yield kept


def _chunks(items, size):
    chunk = []
    for item in items:
        chunk.append(item)
        if len(chunk) >= size:
            yield chunk
            chunk = []
    if chunk:
        yield chunk


def write_dedup_report(removed: Iterable[RemovedDoc], path) -> None:
    """Tab-separated lines: dropped_id, kept_id, similarity (6 decimals)."""
    with open(path, "w", encoding="utf-8") as fh:
        for rec in removed:
            fh.write(f"{rec.dropped_id}\t{rec.kept_id}\t{rec.similarity:.6f}\n")
