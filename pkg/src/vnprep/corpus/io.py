"""Readers and writers for every file format the pipeline touches.

Raw corpora are UTF-8 plain text, either one document per file or
documents separated by a single blank line. Annotated data uses
tab-separated CoNLL-style formats (10-column dependency trees, two-column
token/tag sequences, three-column NLI pairs). Writers emit canonical
form; read followed by write is byte-identical on canonical files.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple

from ..depparse import DependencyTree
from ..errors import ParseError, UsageError
from ..metrics import LabeledSequence

CORPUS_FORMATS = ("files", "blank-lines")

NLI_LABELS = ("contradiction", "entailment", "neutral")


@dataclass(frozen=True)
class Document:
    """One raw-text unit; the granularity deduplication operates on."""

    id: str
    text: str


class DecodeFailure(NamedTuple):
    """A skipped document: where it came from and the offending byte."""

    path: str
    byte_offset: int
    message: str


def _iter_files(path: Path) -> list[Path]:
    if path.is_file():
        return [path]
    if path.is_dir():
        found = [p for p in path.rglob("*") if p.is_file()]
        return sorted(found, key=lambda p: p.as_posix())
    raise FileNotFoundError(f"no such file or directory: {path}")


def read_corpus(
    path: str | os.PathLike,
    format: str = "blank-lines",
    *,
    error_log: list[DecodeFailure] | None = None,
) -> Iterator[Document]:
    """Stream documents from a file or directory tree.

    Order is deterministic: lexicographic file path, then position within
    the file. Invalid UTF-8 skips the affected document (never the run)
    and records a DecodeFailure with the byte offset in ``error_log``.
    Memory stays bounded by one document regardless of corpus size.
    """
    if format not in CORPUS_FORMATS:
        raise UsageError(f"unknown corpus format {format!r}; expected one of {CORPUS_FORMATS}")
    root = Path(path)
    files = _iter_files(root)
    for file in files:
        rel = file.as_posix() if root.is_file() else file.relative_to(root).as_posix()
        if format == "files":
            raw = file.read_bytes()
            try:
                text = raw.decode("utf-8")
            except UnicodeDecodeError as exc:
                if error_log is not None:
                    error_log.append(DecodeFailure(rel, exc.start, exc.reason))
                continue
            yield Document(id=rel, text=text)
        else:
            yield from _read_blank_line_docs(file, rel, error_log)


def _read_blank_line_docs(file: Path, rel: str, error_log) -> Iterator[Document]:
    index = 0
    chunk: list[bytes] = []
    chunk_start = 0
    offset = 0

    def flush() -> Document | None:
        nonlocal index, chunk
        if not chunk:
            return None
        raw = b"".join(chunk)
        chunk = []
        doc_id = f"{rel}#{index}"
        index += 1
        try:
            text = raw.decode("utf-8").strip("\n")
        except UnicodeDecodeError as exc:
            if error_log is not None:
                error_log.append(DecodeFailure(doc_id, chunk_start + exc.start, exc.reason))
            return None
        if not text.strip():
            index -= 1
            return None
        return Document(id=doc_id, text=text)

    with open(file, "rb") as fh:
        for line in fh:
            if line.strip() == b"":
                doc = flush()
                if doc is not None:
                    yield doc
                chunk_start = offset + len(line)
            else:
                if not chunk:
                    chunk_start = offset
                chunk.append(line)
            offset += len(line)
    doc = flush()
    if doc is not None:
        yield doc


def write_corpus(docs: Iterable[Document], path: str | os.PathLike) -> None:
    """Write documents blank-line separated, in stream order."""
    with open(path, "w", encoding="utf-8") as fh:
        first = True
        for doc in docs:
            if not first:
                fh.write("\n")
            fh.write(doc.text.rstrip("\n") + "\n")
            first = False


# -- CoNLL-style dependency trees -------------------------------------------

_CONLL_COLS = 10


def read_conllu(path: str | os.PathLike) -> list[DependencyTree]:
    """Parse a 10-column tab-separated dependency file.

    Uses ID, FORM, UPOS (falling back to XPOS), HEAD and DEPREL; comment
    lines starting with '#' are skipped, blank lines end a sentence.
    Raises ParseError with the line number on malformed lines and
    UsageError on out-of-range head indices or cycles.
    """
    trees: list[DependencyTree] = []
    rows: list[tuple[str, str, int, str]] = []

    def flush(line_no: int) -> None:
        nonlocal rows
        if not rows:
            return
        forms = [r[0] for r in rows]
        pos = [r[1] for r in rows]
        heads = [r[2] for r in rows]
        labels = [r[3] for r in rows]
        n = len(rows)
        for i, h in enumerate(heads):
            if not 0 <= h <= n:
                raise UsageError(
                    f"{path}:{line_no}: head index {h} of token {i + 1} outside [0, {n}]"
                )
        tree = DependencyTree(heads=heads, labels=labels, forms=forms, pos=pos)
        if not tree.is_well_formed():
            raise UsageError(f"{path}:{line_no}: arcs do not form a tree rooted at 0")
        trees.append(tree)
        rows = []

    with open(path, encoding="utf-8") as fh:
        line_no = 0
        for line_no, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip():
                flush(line_no)
                continue
            if line.startswith("#"):
                continue
            cols = line.split("\t")
            if len(cols) != _CONLL_COLS:
                raise ParseError(
                    f"expected {_CONLL_COLS} tab-separated columns, got {len(cols)}",
                    path=path,
                    line=line_no,
                )
            try:
                token_id = int(cols[0])
            except ValueError:
                raise ParseError(f"non-integer token ID {cols[0]!r}", path=path, line=line_no)
            if token_id != len(rows) + 1:
                raise ParseError(
                    f"token ID {token_id} out of sequence (expected {len(rows) + 1})",
                    path=path,
                    line=line_no,
                )
            try:
                head = int(cols[6])
            except ValueError:
                raise ParseError(f"non-integer HEAD {cols[6]!r}", path=path, line=line_no)
            pos_tag = cols[3] if cols[3] != "_" else cols[4]
            rows.append((cols[1], pos_tag, head, cols[7]))
        flush(line_no + 1)
    return trees


def write_conllu(trees: Iterable[DependencyTree], path: str | os.PathLike) -> None:
    """Write trees in canonical 10-column form (unused columns are '_')."""
    with open(path, "w", encoding="utf-8") as fh:
        first = True
        for tree in trees:
            if not first:
                fh.write("\n")
            n = len(tree.heads)
            forms = tree.forms or ["_"] * n
            pos = tree.pos or ["_"] * n
            for i in range(n):
                fh.write(
                    f"{i + 1}\t{forms[i]}\t_\t{pos[i]}\t{pos[i]}\t_\t"
                    f"{tree.heads[i]}\t{tree.labels[i]}\t_\t_\n"
                )
            first = False


# -- token/tag sequences (POS and BIO) ---------------------------------------


def read_tagged(path: str | os.PathLike) -> list[LabeledSequence]:
    """Read 'token<TAB>label' lines, blank line between sentences."""
    sequences: list[LabeledSequence] = []
    tokens: list[str] = []
    labels: list[str] = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip():
                if tokens:
                    sequences.append(LabeledSequence(tokens, labels))
                    tokens, labels = [], []
                continue
            cols = line.split("\t")
            if len(cols) != 2:
                raise ParseError(
                    f"expected 'token<TAB>label', got {line!r}", path=path, line=line_no
                )
            tokens.append(cols[0])
            labels.append(cols[1])
    if tokens:
        sequences.append(LabeledSequence(tokens, labels))
    return sequences


def read_bio(path: str | os.PathLike) -> list[LabeledSequence]:
    """read_tagged plus a BIO well-formedness check of each label.

    Labels must be 'O' or '[BI]-TYPE'. Dangling 'I-' openings are legal
    here; the metrics module repairs and counts them at evaluation time.
    """
    sequences = read_tagged(path)
    for s_idx, seq in enumerate(sequences):
        for label in seq.labels:
            if not _valid_bio_label(label):
                raise ParseError(f"invalid BIO label {label!r} in sentence {s_idx}", path=path)
    return sequences


def _valid_bio_label(label: str) -> bool:
    if label == "O":
        return True
    return len(label) > 2 and label[0] in "BI" and label[1] == "-"


def write_tagged(sequences: Iterable[LabeledSequence], path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        first = True
        for seq in sequences:
            if not first:
                fh.write("\n")
            for token, label in zip(seq.tokens, seq.labels):
                fh.write(f"{token}\t{label}\n")
            first = False


write_bio = write_tagged


# -- NLI sentence pairs -------------------------------------------------------


def read_sentence_pairs(path: str | os.PathLike) -> list[tuple[str, str, str]]:
    """Read 'premise<TAB>hypothesis<TAB>label' lines."""
    pairs: list[tuple[str, str, str]] = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            cols = line.split("\t")
            if len(cols) != 3:
                raise ParseError(
                    f"expected 'premise<TAB>hypothesis<TAB>label', got {len(cols)} columns",
                    path=path,
                    line=line_no,
                )
            if cols[2] not in NLI_LABELS:
                raise ParseError(
                    f"unknown NLI label {cols[2]!r}; expected one of {NLI_LABELS}",
                    path=path,
                    line=line_no,
                )
            pairs.append((cols[0], cols[1], cols[2]))
    return pairs


def write_sentence_pairs(
    pairs: Iterable[tuple[str, str, str]], path: str | os.PathLike
) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for premise, hypothesis, label in pairs:
            fh.write(f"{premise}\t{hypothesis}\t{label}\n")
