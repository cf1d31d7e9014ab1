"""Dataset split sizes and their validation against expected counts."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from ..errors import UsageError


class Task(str, Enum):
    POS = "POS"
    DEP = "DEP"
    NER = "NER"
    NLI = "NLI"


@dataclass(frozen=True)
class DatasetStats:
    """Sentence (or sentence-pair) counts of the train/valid/test splits."""

    task: Task
    n_train: int
    n_valid: int
    n_test: int

    def __post_init__(self):
        for name in ("n_train", "n_valid", "n_test"):
            if getattr(self, name) < 0:
                raise UsageError(f"{name} must be >= 0")


# Split sizes of the standard Vietnamese benchmarks these formats serve:
# VLSP 2013 POS tagging, VnDT v1.1 treebank, VLSP 2016 NER, XNLI-vi.
BENCHMARK_SPLITS = {
    Task.POS: DatasetStats(Task.POS, 27_000, 870, 2_120),
    Task.DEP: DatasetStats(Task.DEP, 8_977, 200, 1_020),
    Task.NER: DatasetStats(Task.NER, 14_861, 2_000, 2_831),
    Task.NLI: DatasetStats(Task.NLI, 392_702, 2_490, 5_010),
}


@dataclass(frozen=True)
class StatsReport:
    task: Task
    passed: bool
    diffs: tuple[str, ...]

    def __str__(self) -> str:
        status = "pass" if self.passed else "fail"
        lines = [f"split-stats {self.task.value}: {status}"]
        lines += [f"  {d}" for d in self.diffs]
        return "\n".join(lines)


def validate_split_stats(observed: DatasetStats, expected: DatasetStats) -> StatsReport:
    """Pass iff all three split counts match; diffs name each mismatch."""
    if observed.task != expected.task:
        raise UsageError(
            f"task mismatch: observed {observed.task.value}, expected {expected.task.value}"
        )
    diffs = []
    for name in ("n_train", "n_valid", "n_test"):
        got, want = getattr(observed, name), getattr(expected, name)
        if got != want:
            diffs.append(f"{name}: observed {got}, expected {want}")
    return StatsReport(task=observed.task, passed=not diffs, diffs=tuple(diffs))
