"""Per-class generalization summaries over a lexicon.

For every position-class key the six binary features are folded into a
cell verdict: uniformly "+", uniformly "-", a majority with counted
exceptions, or heterogeneous.  Entries belonging to two classes at once
are tallied under their combined key ("26/40") only.  A summary can be
diffed against a reference profile; only exceptionless reference cells
constrain anything.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from importlib import resources
from typing import Mapping, Sequence

from .lexicon import LexEntry, Lexicon

#: Summarized features, in reference-file column order.
SUMMARY_FEATURES = (
    "vorfeld", "comparable", "negatable", "gradable", "rhematic", "predicative",
)

#: Column tags used by the reference file format for those features.
REFERENCE_COLUMNS = ("E", "M", "L", "I", "D", "K")

_REFERENCE_HEADER = ("class", "count") + REFERENCE_COLUMNS


class Verdict(str, Enum):
    """How uniform a class is for one feature."""

    ALL_PLUS = "all_plus"
    ALL_MINUS = "all_minus"
    MAJORITY = "majority"
    HETEROGENEOUS = "heterogeneous"
    EMPTY = "empty"


@dataclass(frozen=True, slots=True)
class CellSummary:
    """Verdict for one (class, feature) cell."""

    verdict: Verdict
    value: bool | None = None
    exceptions: int = 0

    def __post_init__(self) -> None:
        if self.verdict is Verdict.MAJORITY:
            if self.value is None or self.exceptions < 1:
                raise ValueError("a majority needs a value and >= 1 exceptions")
        elif self.value is not None or self.exceptions:
            raise ValueError("only majority cells carry a value and exceptions")

    @property
    def uniform_value(self) -> bool | None:
        """The exceptionless value, if the cell constrains one."""
        if self.verdict is Verdict.ALL_PLUS:
            return True
        if self.verdict is Verdict.ALL_MINUS:
            return False
        return None

    def to_dict(self) -> dict:
        out: dict = {"verdict": self.verdict.value}
        if self.verdict is Verdict.MAJORITY:
            out["value"] = self.value
            out["exceptions"] = self.exceptions
        return out


@dataclass(frozen=True, slots=True)
class ClassSummary:
    """Feature verdicts for one position-class key."""

    classes: tuple[int, ...]
    count: int
    cells: Mapping[str, CellSummary]

    @property
    def key(self) -> str:
        return "/".join(str(c) for c in self.classes)


@dataclass(frozen=True, slots=True)
class Mismatch:
    """A computed cell contradicting an exceptionless reference cell."""

    class_key: str
    feature: str
    expected: bool
    observed: CellSummary


def summarize_cell(values: Sequence[bool]) -> CellSummary:
    """Fold the feature values of one class into a cell verdict."""
    if not values:
        return CellSummary(Verdict.EMPTY)
    plus = sum(1 for v in values if v)
    minus = len(values) - plus
    if minus == 0:
        return CellSummary(Verdict.ALL_PLUS)
    if plus == 0:
        return CellSummary(Verdict.ALL_MINUS)
    if plus == minus:
        return CellSummary(Verdict.HETEROGENEOUS)
    if plus > minus:
        return CellSummary(Verdict.MAJORITY, value=True, exceptions=minus)
    return CellSummary(Verdict.MAJORITY, value=False, exceptions=plus)


def summarize(lexicon: Lexicon) -> list[ClassSummary]:
    """One summary per class key present, ordered by class number.

    A dual key sorts directly after its lower member class.
    """
    buckets: dict[tuple[int, ...], list[LexEntry]] = {}
    for entry in lexicon.entries:
        buckets.setdefault(tuple(sorted(entry.classes)), []).append(entry)
    summaries = []
    for key in sorted(buckets):
        members = buckets[key]
        cells = {
            feature: summarize_cell([getattr(e, feature) for e in members])
            for feature in SUMMARY_FEATURES
        }
        summaries.append(ClassSummary(classes=key, count=len(members), cells=cells))
    return summaries


def _parse_reference_cell(token: str, line_no: int) -> CellSummary:
    token = token.strip()
    if token == "":
        return CellSummary(Verdict.HETEROGENEOUS)
    if token == "+":
        return CellSummary(Verdict.ALL_PLUS)
    if token == "-":
        return CellSummary(Verdict.ALL_MINUS)
    sign, digits = token[0], token[1:]
    if sign in "+-" and digits.isdigit() and int(digits) > 0:
        return CellSummary(
            Verdict.MAJORITY, value=(sign == "+"), exceptions=int(digits)
        )
    raise ValueError(f"line {line_no}: unreadable reference cell {token!r}")


def parse_reference(text: str) -> list[ClassSummary]:
    """Parse a reference profile file into class summaries.

    The format mirrors the lexicon files: tab separated, "#" comments,
    and a fixed header.  A count with a trailing "+" marks an
    open-ended class and is read as its numeric part.
    """
    rows: list[ClassSummary] = []
    header_seen = False
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        cells = line.split("\t")
        if not header_seen:
            header_seen = True
            if tuple(c.strip() for c in cells) == _REFERENCE_HEADER:
                continue
            raise ValueError(f"line {line_no}: missing reference header")
        if len(cells) != len(_REFERENCE_HEADER):
            raise ValueError(
                f"line {line_no}: expected {len(_REFERENCE_HEADER)} fields,"
                f" found {len(cells)}"
            )
        classes = tuple(sorted(int(c) for c in cells[0].split("/")))
        count_token = cells[1].strip().rstrip("+")
        if not count_token.isdigit():
            raise ValueError(f"line {line_no}: unreadable count {cells[1]!r}")
        summaries = {
            feature: _parse_reference_cell(token, line_no)
            for feature, token in zip(SUMMARY_FEATURES, cells[2:])
        }
        rows.append(ClassSummary(
            classes=classes, count=int(count_token), cells=summaries,
        ))
    return rows


def load_class_reference() -> list[ClassSummary]:
    """The packaged per-class feature profile of the full coded lexicon."""
    text = resources.files("adverbia").joinpath(
        "data", "class_reference.tsv"
    ).read_text("utf-8")
    return parse_reference(text)


def diff_against_reference(
    summaries: Sequence[ClassSummary], reference: Sequence[ClassSummary]
) -> list[Mismatch]:
    """Cells where the computed lexicon contradicts the reference.

    Only exceptionless reference cells constrain; majority and
    heterogeneous cells pass everything.  Class keys absent from either
    side are skipped.
    """
    by_key = {row.key: row for row in reference}
    mismatches: list[Mismatch] = []
    for summary in summaries:
        row = by_key.get(summary.key)
        if row is None:
            continue
        for feature in SUMMARY_FEATURES:
            expected = row.cells[feature].uniform_value
            if expected is None:
                continue
            observed = summary.cells[feature]
            if observed.uniform_value != expected:
                mismatches.append(Mismatch(
                    class_key=summary.key,
                    feature=feature,
                    expected=expected,
                    observed=observed,
                ))
    return mismatches
