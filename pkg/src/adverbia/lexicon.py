"""Entry model and file handling for a German adverbial lexicon.

Every reading of an adverbial is one entry carrying thirteen features:

  lemma        word form, optionally followed by a mnemonic in parentheses
  classes      linear position classes (1..44); lower precedes higher
  group        macro group: pragm(atic), sit(uative), man(ner)
  rhematic     can carry the sentence focus
  vorfeld      can stand alone in front of the finite verb
  scope        categories the entry, read as a degree particle, may modify
  direction    side a particle takes relative to its target
  distance     particle tolerates non-adjacent placement
  gradable     the entry itself accepts a degree particle
  valence      cases of governed complements
  predicative  usable in predicative position
  negatable    may stand to the right of the negation particle
  comparable   has comparative forms

The on-disk format is UTF-8, tab separated, one entry per row.  Lines
starting with "#" are comments; the first non-comment line must be the
header.  Booleans are "+" and "-", multi-valued fields are comma joined
("s,man,sit"), multiple position classes are slash joined ("26/40"), and
an empty valence or direction is written "-".
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from enum import Enum
from importlib import resources
from typing import Iterator, Literal

CLASS_MIN = 1
CLASS_MAX = 44

#: Position classes reserved for prepositional phrases; no adverb entry
#: may claim them.
PP_ONLY_CLASSES = frozenset({10, 23, 32})

HEADER = (
    "lemma", "class", "group", "rhema", "vorfeld", "scope", "dir",
    "dist", "grad", "valence", "pred", "neg", "comp",
)


class MacroGroup(str, Enum):
    """Coarse functional group of an adverbial."""

    PRAGMATIC = "pragm"
    SITUATIVE = "sit"
    MANNER = "man"


#: Approximate position-class band expected for each macro group.  The
#: boundary classes are fuzzy, so disagreement is only a warning.
GROUP_CLASS_RANGES: dict[MacroGroup, tuple[int, int]] = {
    MacroGroup.PRAGMATIC: (1, 18),
    MacroGroup.SITUATIVE: (19, 41),
    MacroGroup.MANNER: (42, 44),
}


class ScopeCategory(str, Enum):
    """Kinds of constituents a degree particle can take scope over.

    Declaration order doubles as the canonical serialization order.
    """

    SENTENCE = "s"
    ADJECTIVE = "ap"
    NOUN_OR_PREP = "npp"
    CARDINAL = "cp"
    NEGATION = "neg"
    CONJUNCTION = "conj"
    MANNER = "man"
    SITUATIVE = "sit"
    PRAGMATIC = "pragm"


class Direction(str, Enum):
    """Placement of a degree particle relative to its target."""

    PRE = "pre"
    POST = "post"
    BOTH = "both"
    NONE = "none"


class Case(str, Enum):
    """Morphological case governed by a valence-bearing adverbial."""

    GENITIVE = "gen"
    DATIVE = "dat"
    ACCUSATIVE = "acc"


SCOPE_DEFAULT = frozenset({ScopeCategory.SENTENCE})

Severity = Literal["error", "warning"]


@dataclass(frozen=True, slots=True)
class Diagnostic:
    """One validation or parse finding; errors block the entry."""

    severity: Severity
    code: str
    message: str
    line: int | None = None
    lemma: str | None = None

    @property
    def is_error(self) -> bool:
        return self.severity == "error"


@dataclass(frozen=True, slots=True)
class LexEntry:
    """A single adverbial reading with its thirteen features."""

    lemma: str
    classes: frozenset[int]
    group: MacroGroup
    rhematic: bool = False
    vorfeld: bool = False
    scope: frozenset[ScopeCategory] = SCOPE_DEFAULT
    direction: Direction = Direction.NONE
    distance: bool = False
    gradable: bool = False
    valence: frozenset[Case] = frozenset()
    predicative: bool = False
    negatable: bool = False
    comparable: bool = False
    comment: str | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "classes", frozenset(self.classes))
        object.__setattr__(self, "scope", frozenset(self.scope))
        object.__setattr__(self, "valence", frozenset(self.valence))
        if not self.lemma or not self.lemma.strip():
            raise ValueError("lemma must not be empty")
        if "\t" in self.lemma or "\n" in self.lemma:
            raise ValueError("lemma must not contain tabs or newlines")
        if self.comment is not None and ("\t" in self.comment or "\n" in self.comment):
            raise ValueError("comment must not contain tabs or newlines")
        if not self.classes:
            raise ValueError("at least one position class is required")
        for cls in self.classes:
            if not CLASS_MIN <= cls <= CLASS_MAX:
                raise ValueError(f"position class {cls} outside {CLASS_MIN}..{CLASS_MAX}")
        if not self.scope:
            raise ValueError("scope set must not be empty")

    @property
    def sort_class(self) -> int:
        """Lowest member class; the effective linearization key."""
        return min(self.classes)


@dataclass(frozen=True, slots=True)
class Lexicon:
    """Immutable collection of entries with a lemma index."""

    entries: tuple[LexEntry, ...] = ()
    _index: dict[str, tuple[LexEntry, ...]] = field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        seen: set[tuple[str, frozenset[int], MacroGroup]] = set()
        index: dict[str, list[LexEntry]] = {}
        for entry in self.entries:
            key = (entry.lemma, entry.classes, entry.group)
            if key in seen:
                raise ValueError(f"duplicate reading for {entry.lemma!r}")
            seen.add(key)
            index.setdefault(entry.lemma, []).append(entry)
        object.__setattr__(
            self, "_index", {lemma: tuple(es) for lemma, es in index.items()}
        )

    def lookup(self, lemma: str) -> list[LexEntry]:
        """All readings of ``lemma`` (exact, case sensitive), in file order."""
        return list(self._index.get(lemma, ()))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[LexEntry]:
        return iter(self.entries)


_BOOL_TOKENS = {"+": True, "-": False}

_LEMMA_COMMENT = re.compile(r"^(?P<lemma>.*?)\s*\((?P<comment>.*)\)$")


def _split_lemma(cell: str) -> tuple[str, str | None]:
    cell = cell.strip()
    match = _LEMMA_COMMENT.match(cell)
    if match is None:
        return cell, None
    return match.group("lemma"), match.group("comment") or None


def validate_entry(entry: LexEntry) -> list[Diagnostic]:
    """Check one entry against the lexicon-wide feature constraints.

    PP-only classes, distance without a direction, and a particle
    direction on a purely sentence-scoped entry are errors; a mismatch
    between macro group and class band is only a warning.
    """
    out: list[Diagnostic] = []

    def note(severity: Severity, code: str, message: str) -> None:
        out.append(Diagnostic(severity, code, message, lemma=entry.lemma))

    for cls in sorted(entry.classes & PP_ONLY_CLASSES):
        note("error", "pp_only_class",
             f"position class {cls} is reserved for prepositional phrases")
    low, high = GROUP_CLASS_RANGES[entry.group]
    stray = sorted(
        c for c in entry.classes
        if not low <= c <= high and c not in PP_ONLY_CLASSES
    )
    if stray:
        joined = ", ".join(str(c) for c in stray)
        note("warning", "group_class_range",
             f"class {joined} outside the usual {entry.group.value} band {low}..{high}")
    if entry.distance and entry.direction is Direction.NONE:
        note("error", "distance_without_direction",
             "distance placement requires a particle direction")
    if entry.scope == SCOPE_DEFAULT and entry.direction is not Direction.NONE:
        note("error", "sentence_scope_direction",
             "an entry with sentence-only scope cannot take a particle direction")
    return out


class _RowProblems:
    """Collects per-row parse errors so every bad field gets reported."""

    def __init__(self, line: int) -> None:
        self.line = line
        self.diagnostics: list[Diagnostic] = []

    def error(self, code: str, message: str) -> None:
        self.diagnostics.append(Diagnostic("error", code, message, line=self.line))


def _parse_classes(cell: str, problems: _RowProblems) -> frozenset[int]:
    classes: set[int] = set()
    for token in cell.split("/"):
        token = token.strip()
        if not token.isdigit():
            problems.error("class_token", f"unreadable position class {token!r}")
            continue
        value = int(token)
        if not CLASS_MIN <= value <= CLASS_MAX:
            problems.error(
                "class_range",
                f"position class {value} outside {CLASS_MIN}..{CLASS_MAX}",
            )
            continue
        classes.add(value)
    return frozenset(classes)


def _parse_bool(cell: str, column: str, problems: _RowProblems) -> bool:
    value = _BOOL_TOKENS.get(cell.strip())
    if value is None:
        problems.error("bool_token", f"column {column!r} expects '+' or '-', got {cell!r}")
        return False
    return value


def _parse_scope(cell: str, problems: _RowProblems) -> frozenset[ScopeCategory]:
    cell = cell.strip()
    if cell in ("", "-"):
        return SCOPE_DEFAULT
    scope: set[ScopeCategory] = set()
    for token in cell.split(","):
        try:
            scope.add(ScopeCategory(token.strip()))
        except ValueError:
            problems.error("scope_token", f"unknown scope category {token.strip()!r}")
    return frozenset(scope) or SCOPE_DEFAULT


def _parse_valence(cell: str, problems: _RowProblems) -> frozenset[Case]:
    cell = cell.strip()
    if cell in ("", "-"):
        return frozenset()
    valence: set[Case] = set()
    for token in cell.split(","):
        try:
            valence.add(Case(token.strip()))
        except ValueError:
            problems.error("valence_token", f"unknown case {token.strip()!r}")
    return frozenset(valence)


def _parse_row(line_no: int, line: str) -> tuple[LexEntry | None, list[Diagnostic]]:
    cells = line.split("\t")
    problems = _RowProblems(line_no)
    if len(cells) != len(HEADER):
        problems.error(
            "column_count",
            f"expected {len(HEADER)} tab-separated fields, found {len(cells)}",
        )
        return None, problems.diagnostics

    lemma, comment = _split_lemma(cells[0])
    if not lemma:
        problems.error("empty_lemma", "lemma must not be empty")
    classes = _parse_classes(cells[1], problems)
    if not classes and not problems.diagnostics:
        problems.error("class_token", "at least one position class is required")
    group: MacroGroup | None = None
    try:
        group = MacroGroup(cells[2].strip())
    except ValueError:
        problems.error("group_token", f"unknown macro group {cells[2].strip()!r}")
    rhematic = _parse_bool(cells[3], "rhema", problems)
    vorfeld = _parse_bool(cells[4], "vorfeld", problems)
    scope = _parse_scope(cells[5], problems)
    direction: Direction | None = None
    token = cells[6].strip()
    if token in ("", "-"):
        direction = Direction.NONE
    else:
        try:
            direction = Direction(token)
        except ValueError:
            problems.error("direction_token", f"unknown direction {token!r}")
    distance = _parse_bool(cells[7], "dist", problems)
    gradable = _parse_bool(cells[8], "grad", problems)
    valence = _parse_valence(cells[9], problems)
    predicative = _parse_bool(cells[10], "pred", problems)
    negatable = _parse_bool(cells[11], "neg", problems)
    comparable = _parse_bool(cells[12], "comp", problems)

    if problems.diagnostics:
        return None, problems.diagnostics
    assert group is not None and direction is not None
    entry = LexEntry(
        lemma=lemma,
        classes=classes,
        group=group,
        rhematic=rhematic,
        vorfeld=vorfeld,
        scope=scope,
        direction=direction,
        distance=distance,
        gradable=gradable,
        valence=valence,
        predicative=predicative,
        negatable=negatable,
        comparable=comparable,
        comment=comment,
    )
    return entry, []


def parse_lexicon(text: str) -> tuple[Lexicon, list[Diagnostic]]:
    """Parse lexicon text into entries plus diagnostics.

    Parsing is total: malformed rows are skipped with an error
    diagnostic naming the line, well-formed rows still pass through
    `validate_entry`, and duplicates of an already accepted reading are
    rejected.  Row order is preserved.
    """
    diagnostics: list[Diagnostic] = []
    entries: list[LexEntry] = []
    seen: set[tuple[str, frozenset[int], MacroGroup]] = set()
    header_seen = False
    for line_no, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        if not header_seen:
            header_seen = True
            if tuple(line.split("\t")) == HEADER:
                continue
            diagnostics.append(Diagnostic(
                "error", "header",
                "first non-comment line must be the column header",
                line=line_no,
            ))
            continue
        entry, row_diags = _parse_row(line_no, line)
        if entry is not None:
            row_diags = [
                replace(d, line=line_no) for d in validate_entry(entry)
            ]
        diagnostics.extend(row_diags)
        if entry is None or any(d.is_error for d in row_diags):
            continue
        key = (entry.lemma, entry.classes, entry.group)
        if key in seen:
            diagnostics.append(Diagnostic(
                "error", "duplicate_reading",
                f"duplicate reading for {entry.lemma!r}",
                line=line_no, lemma=entry.lemma,
            ))
            continue
        seen.add(key)
        entries.append(entry)
    return Lexicon(tuple(entries)), diagnostics


def _format_bool(value: bool) -> str:
    return "+" if value else "-"


def _format_row(entry: LexEntry) -> str:
    lemma = entry.lemma if entry.comment is None else f"{entry.lemma} ({entry.comment})"
    scope = ",".join(c.value for c in ScopeCategory if c in entry.scope)
    valence = ",".join(c.value for c in Case if c in entry.valence) or "-"
    direction = "-" if entry.direction is Direction.NONE else entry.direction.value
    cells = (
        lemma,
        "/".join(str(c) for c in sorted(entry.classes)),
        entry.group.value,
        _format_bool(entry.rhematic),
        _format_bool(entry.vorfeld),
        scope,
        direction,
        _format_bool(entry.distance),
        _format_bool(entry.gradable),
        valence,
        _format_bool(entry.predicative),
        _format_bool(entry.negatable),
        _format_bool(entry.comparable),
    )
    return "\t".join(cells)


def serialize_lexicon(lexicon: Lexicon) -> str:
    """Render a lexicon in the tab-separated file format.

    `parse_lexicon(serialize_lexicon(lex))` reproduces `lex` exactly.
    """
    lines = ["\t".join(HEADER)]
    lines.extend(_format_row(entry) for entry in lexicon.entries)
    return "\n".join(lines) + "\n"


def entry_to_dict(entry: LexEntry) -> dict:
    """JSON-ready view of an entry with canonically ordered collections."""
    return {
        "lemma": entry.lemma,
        "comment": entry.comment,
        "classes": sorted(entry.classes),
        "group": entry.group.value,
        "rhematic": entry.rhematic,
        "vorfeld": entry.vorfeld,
        "scope": [c.value for c in ScopeCategory if c in entry.scope],
        "direction": entry.direction.value,
        "distance": entry.distance,
        "gradable": entry.gradable,
        "valence": [c.value for c in Case if c in entry.valence],
        "predicative": entry.predicative,
        "negatable": entry.negatable,
        "comparable": entry.comparable,
    }


def _load_packaged(name: str) -> Lexicon:
    text = resources.files("adverbia").joinpath("data", name).read_text("utf-8")
    lexicon, diagnostics = parse_lexicon(text)
    bad = [d for d in diagnostics if d.is_error]
    if bad:
        raise ValueError(f"packaged lexicon {name} is broken: {bad[0].message}")
    return lexicon


def load_sample_lexicon() -> Lexicon:
    """The twelve-entry sample lexicon shipped with the package."""
    return _load_packaged("sample_lexicon.tsv")


def load_extended_lexicon() -> Lexicon:
    """Sample lexicon plus homonym and particle entries used in examples."""
    return _load_packaged("extended_lexicon.tsv")
