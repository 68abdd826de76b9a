"""Position-class ordering of adverbial sequences.

Within the middle field, an adverbial with a lower position class
precedes one with a higher class.  `order_angaben` produces such an
order; `check_order` judges a given order and reports violations.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import pairwise
from typing import Literal, Sequence

from .lexicon import Direction, LexEntry, MacroGroup

#: Position class of the negation particle.
NEGATION_CLASS = 41

ViolationKind = Literal[
    "class_order",
    "negation_follow",
    "focus_on_nonrhematic",
    "vorfeld_incapable",
]


@dataclass(frozen=True, slots=True)
class OrderViolation:
    """One breach of the linearization constraints."""

    kind: ViolationKind
    positions: tuple[int, ...]
    detail: str


@dataclass(frozen=True, slots=True)
class AngabeSeq:
    """An ordered sequence of adverbial readings as they occur in a clause.

    `focus` marks the one item carrying the sentence focus, `vorfeld`
    the one item fronted before the finite verb; both are optional
    indexes into `items`.
    """

    items: tuple[LexEntry, ...]
    focus: int | None = None
    vorfeld: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "items", tuple(self.items))
        for name in ("focus", "vorfeld"):
            index = getattr(self, name)
            if index is not None and not 0 <= index < len(self.items):
                raise ValueError(f"{name} index {index} out of range")


def order_indices(items: Sequence[LexEntry]) -> list[int]:
    """Indices of ``items`` sorted by lowest position class, stable."""
    return sorted(range(len(items)), key=lambda i: items[i].sort_class)


def order_angaben(items: Sequence[LexEntry]) -> list[LexEntry]:
    """Arrange adverbials by position class; ties keep their input order."""
    return [items[i] for i in order_indices(items)]


def _pair_ordered(left: LexEntry, right: LexEntry) -> bool:
    # Any member-class combination may validate the pair, so only
    # min(left) > max(right) is irreparable.
    return min(left.classes) <= max(right.classes)


def check_order(seq: AngabeSeq) -> list[OrderViolation]:
    """Report every linearization violation in the given sequence.

    A fronted item (``seq.vorfeld``) leaves the middle field and is
    exempt from the class-order and negation checks; instead it must be
    Vorfeld capable.  The checks are independent, so one sequence can
    collect several violations.
    """
    items = seq.items
    violations: list[OrderViolation] = []

    field = [i for i in range(len(items)) if i != seq.vorfeld]
    for left, right in pairwise(field):
        if not _pair_ordered(items[left], items[right]):
            violations.append(OrderViolation(
                "class_order", (left, right),
                f"{items[left].lemma} (class {min(items[left].classes)}) precedes "
                f"{items[right].lemma} (class {max(items[right].classes)})",
            ))

    negations = [i for i in field if NEGATION_CLASS in items[i].classes]
    for position in field:
        before = [n for n in negations if n < position]
        if before and not items[position].negatable:
            violations.append(OrderViolation(
                "negation_follow", (before[-1], position),
                f"{items[position].lemma} cannot follow the negation particle",
            ))

    if seq.focus is not None and not items[seq.focus].rhematic:
        violations.append(OrderViolation(
            "focus_on_nonrhematic", (seq.focus,),
            f"{items[seq.focus].lemma} cannot carry the sentence focus",
        ))

    if seq.vorfeld is not None and not items[seq.vorfeld].vorfeld:
        violations.append(OrderViolation(
            "vorfeld_incapable", (seq.vorfeld,),
            f"{items[seq.vorfeld].lemma} cannot stand alone in the Vorfeld",
        ))

    return violations


def check_vorfeld(entry: LexEntry) -> bool:
    """Whether the entry may occupy the Vorfeld on its own."""
    return entry.vorfeld


def check_focus(entry: LexEntry) -> bool:
    """Whether the entry may carry the sentence focus."""
    return entry.rhematic


_NICHT = LexEntry(
    lemma="nicht",
    classes=frozenset({NEGATION_CLASS}),
    group=MacroGroup.SITUATIVE,
    vorfeld=True,
    direction=Direction.NONE,
)


def builtin_negation() -> LexEntry:
    """The fixed entry for the negation particle "nicht"."""
    return _NICHT
