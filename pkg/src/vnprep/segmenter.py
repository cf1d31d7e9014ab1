"""Sentence splitting and Vietnamese word segmentation.

Vietnamese writing separates *syllables* with spaces; most word types
span two or more syllables. Word segmentation groups syllables into word
tokens, marked by joining the syllables with underscores, e.g. the
six-syllable sentence "Tôi là một nghiên cứu viên" becomes the four
words "Tôi là một nghiên_cứu_viên". The segmenter here is a pluggable
lexicon-driven greedy leftmost-longest matcher; it is deterministic and
lossless (desegmentation recovers the original syllables exactly).
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Sequence

from .errors import UsageError

# Fraction of Vietnamese word types with >= 2 syllables reported in the
# word-segmentation literature; diagnostic context for lexicon audits.
MULTISYLLABLE_TYPE_FRACTION_REFERENCE = 0.85

SENTENCE_END = ".!?…"

UNDERSCORE = "_"


@dataclass(frozen=True)
class Sentence:
    """Ordered whitespace-delimited syllables of one sentence."""

    syllables: tuple[str, ...]

    def __post_init__(self):
        for s in self.syllables:
            if not s or s != s.strip() or any(ch.isspace() for ch in s):
                raise UsageError(f"syllable {s!r} contains whitespace or is empty")
            if UNDERSCORE in s:
                raise UsageError(
                    f"syllable {s!r} contains {UNDERSCORE!r}, which is reserved as the "
                    "word-join marker; clean the corpus before segmentation"
                )

    @classmethod
    def from_text(cls, text: str) -> "Sentence":
        return cls(tuple(text.split()))

    def __len__(self) -> int:
        return len(self.syllables)


@dataclass(frozen=True)
class WordSegmentedSentence:
    """Word tokens, each an underscore-joined run of >= 1 syllables."""

    words: tuple[str, ...]

    def __post_init__(self):
        for w in self.words:
            if not w or any(not part for part in w.split(UNDERSCORE)):
                raise UsageError(f"word token {w!r} has an empty syllable")

    def __len__(self) -> int:
        return len(self.words)


@dataclass(frozen=True)
class Lexicon:
    """Known word entries as exact syllable sequences."""

    entries: frozenset[tuple[str, ...]]
    max_entry_len: int = field(init=False)

    def __post_init__(self):
        for entry in self.entries:
            if not entry or any(not s for s in entry):
                raise UsageError(f"empty lexicon entry {entry!r}")
        object.__setattr__(
            self, "max_entry_len", max((len(e) for e in self.entries), default=0)
        )

    @classmethod
    def from_words(cls, words: Iterable[Sequence[str] | str]) -> "Lexicon":
        """Entries given as syllable sequences or space-separated strings."""
        entries = set()
        for w in words:
            syllables = tuple(w.split()) if isinstance(w, str) else tuple(w)
            entries.add(syllables)
        return cls(frozenset(entries))

    @classmethod
    def load(cls, path) -> "Lexicon":
        """One entry per line, syllables space-separated, UTF-8."""
        with open(path, encoding="utf-8") as fh:
            return cls.from_words(line for line in fh if line.strip())

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            for entry in sorted(self.entries):
                fh.write(" ".join(entry) + "\n")

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, entry) -> bool:
        return tuple(entry) in self.entries


def default_abbreviations() -> frozenset[str]:
    """Sentence-split exception list shipped with the package."""
    text = resources.files("vnprep.data").joinpath("abbreviations.txt").read_text("utf-8")
    return frozenset(line.strip() for line in text.splitlines() if line.strip())


def _load_abbreviations(abbreviations) -> frozenset[str]:
    if abbreviations is None:
        return default_abbreviations()
    return frozenset(abbreviations)


def split_sentences(text: str, abbreviations: Iterable[str] | None = None) -> list[Sentence]:
    """Split raw text into sentences of syllables.

    A split happens after one of ``.!?…`` that is followed by whitespace
    and then an uppercase letter or a digit, unless the token ending at
    that punctuation is on the abbreviation exception list (e.g. "TS.",
    "TP."). The multiset of whitespace tokens is preserved exactly;
    sentence boundaries only ever fall on whitespace.
    """
    abbrevs = _load_abbreviations(abbreviations)
    pieces: list[str] = []
    start = 0
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch in SENTENCE_END and i + 1 < n and text[i + 1].isspace():
            j = i + 1
            while j < n and text[j].isspace():
                j += 1
            if j < n and (text[j].isupper() or text[j].isdigit()):
                tok_start = i
                while tok_start > start and not text[tok_start - 1].isspace():
                    tok_start -= 1
                if text[tok_start : i + 1] not in abbrevs:
                    pieces.append(text[start : i + 1])
                    start = j
                    i = j
                    continue
        i += 1
    pieces.append(text[start:])
    sentences = []
    for piece in pieces:
        if piece.split():
            sentences.append(Sentence.from_text(piece))
    return sentences


def _is_punct(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P")


def detach_punctuation(sentence: Sentence) -> Sentence:
    """Peel leading/trailing punctuation characters into their own syllables.

    "viên." -> "viên", "." and "«Hà" -> "«", "Hà". Syllables consisting
    entirely of punctuation are left intact. Applied between sentence
    splitting and word segmentation so the lexicon sees bare syllables.
    """
    out: list[str] = []
    for syl in sentence.syllables:
        if all(_is_punct(ch) for ch in syl):
            out.append(syl)
            continue
        lead = 0
        while lead < len(syl) and _is_punct(syl[lead]):
            lead += 1
        trail = len(syl)
        while trail > lead and _is_punct(syl[trail - 1]):
            trail -= 1
        out.extend(syl[:lead])
        out.append(syl[lead:trail])
        out.extend(syl[trail:])
    return Sentence(tuple(out))


def segment_words(sentence: Sentence, lexicon: Lexicon) -> WordSegmentedSentence:
    """Greedy leftmost-longest match against the lexicon.

    At each position the longest lexicon entry starting there is emitted
    as one word (syllables joined with underscores); if none matches, the
    single syllable is its own word. Lossless: desegmentation restores
    the input syllable sequence.
    """
    syllables = sentence.syllables
    n = len(syllables)
    words: list[str] = []
    i = 0
    while i < n:
        take = 1
        longest = min(lexicon.max_entry_len, n - i)
        for length in range(longest, 1, -1):
            if syllables[i : i + length] in lexicon:
                take = length
                break
        words.append(UNDERSCORE.join(syllables[i : i + take]))
        i += take
    return WordSegmentedSentence(tuple(words))


def desegment(ws: WordSegmentedSentence) -> Sentence:
    """Inverse of segment_words: split every word on underscores."""
    syllables: list[str] = []
    for word in ws.words:
        syllables.extend(word.split(UNDERSCORE))
    return Sentence(tuple(syllables))


def lexicon_multisyllable_fraction(lexicon: Lexicon) -> float:
    """Fraction of lexicon entries spanning >= 2 syllables."""
    if len(lexicon) == 0:
        raise UsageError("empty lexicon")
    multi = sum(1 for e in lexicon.entries if len(e) >= 2)
    return multi / len(lexicon)


def write_segmented(sentences: Iterable[WordSegmentedSentence | None], path) -> None:
    """One sentence per line, words space-separated; None marks a document
    boundary and is written as a blank line."""
    with open(path, "w", encoding="utf-8") as fh:
        for ws in sentences:
            if ws is None:
                fh.write("\n")
            else:
                fh.write(" ".join(ws.words) + "\n")


def read_segmented(path) -> list[WordSegmentedSentence | None]:
    """Inverse of write_segmented; blank lines read back as None."""
    out: list[WordSegmentedSentence | None] = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.rstrip("\n")
            out.append(WordSegmentedSentence(tuple(line.split())) if line.strip() else None)
    return out
