"""Context-cue filtering of homonymous adverbial readings.

Each cue states one observable fact about the clause; a reading
survives only if its features are compatible with every cue.  Filtering
never reorders readings and may legitimately leave none.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .lexicon import Case, LexEntry, ScopeCategory


class CueKind(str, Enum):
    """Observable context facts usable for disambiguation."""

    IN_VORFELD = "in_vorfeld"
    PREDICATIVE_POSITION = "predicative_position"
    FOLLOWS_NEGATION = "follows_negation"
    CARRIES_FOCUS = "carries_focus"
    COMPLEMENT_CASE = "complement_case"
    GRADUATED_BY = "graduated_by"


@dataclass(frozen=True, slots=True)
class Cue:
    """A context cue, optionally parameterized by a case or a particle."""

    kind: CueKind
    case: Case | None = None
    particle: LexEntry | None = None

    def __post_init__(self) -> None:
        if (self.kind is CueKind.COMPLEMENT_CASE) != (self.case is not None):
            raise ValueError("complement_case requires a case and nothing else does")
        if (self.kind is CueKind.GRADUATED_BY) != (self.particle is not None):
            raise ValueError("graduated_by requires a particle and nothing else does")


IN_VORFELD = Cue(CueKind.IN_VORFELD)
PREDICATIVE_POSITION = Cue(CueKind.PREDICATIVE_POSITION)
FOLLOWS_NEGATION = Cue(CueKind.FOLLOWS_NEGATION)
CARRIES_FOCUS = Cue(CueKind.CARRIES_FOCUS)


def complement_case(case: Case) -> Cue:
    """Cue: the adverbial governs a complement in the given case."""
    return Cue(CueKind.COMPLEMENT_CASE, case=case)


def graduated_by(particle: LexEntry) -> Cue:
    """Cue: the adverbial is modified by the given degree particle."""
    return Cue(CueKind.GRADUATED_BY, particle=particle)


def survives(reading: LexEntry, cue: Cue) -> bool:
    """Whether a single reading is compatible with a single cue."""
    if cue.kind is CueKind.IN_VORFELD:
        return reading.vorfeld
    if cue.kind is CueKind.PREDICATIVE_POSITION:
        return reading.predicative
    if cue.kind is CueKind.FOLLOWS_NEGATION:
        return reading.negatable
    if cue.kind is CueKind.CARRIES_FOCUS:
        return reading.rhematic
    if cue.kind is CueKind.COMPLEMENT_CASE:
        return cue.case in reading.valence
    assert cue.particle is not None
    return (
        reading.gradable
        and ScopeCategory(reading.group.value) in cue.particle.scope
    )


def filter_by_context(
    readings: Sequence[LexEntry], cues: Iterable[Cue]
) -> list[LexEntry]:
    """Keep the readings compatible with every cue, in their given order."""
    cues = list(cues)
    return [r for r in readings if all(survives(r, cue) for cue in cues)]
