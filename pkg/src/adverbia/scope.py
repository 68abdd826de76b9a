"""Degree-particle scope resolution over a tokenized clause.

A particle is an adverbial entry with a placement direction.  It may
bind one target constituent; each constituent accepts at most one
particle.  Candidates next to the particle are tried first on the side
its direction allows, distance-capable particles then search the rest
of the clause, nearest position first and leftward before rightward at
equal distance.  When particles compete, `attach` keeps as many of them
bound as possible and breaks ties by that same preference order, taking
the particles in clause order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .lexicon import Direction, LexEntry, ScopeCategory


class TokenKind(str, Enum):
    """Coarse category of one clause token."""

    ANGABE = "angabe"
    NP = "np"
    PP = "pp"
    AP = "ap"
    CP = "cp"
    CONJ = "conj"
    NEG = "neg"
    VERB = "verb"
    OTHER = "other"


#: Token kinds that count as gradable unless a token overrides it.
_DEFAULT_GRADABLE = frozenset({
    TokenKind.NP, TokenKind.PP, TokenKind.AP, TokenKind.CP,
    TokenKind.CONJ, TokenKind.NEG,
})

_KIND_CATEGORY = {
    TokenKind.NP: ScopeCategory.NOUN_OR_PREP,
    TokenKind.PP: ScopeCategory.NOUN_OR_PREP,
    TokenKind.AP: ScopeCategory.ADJECTIVE,
    TokenKind.CP: ScopeCategory.CARDINAL,
    TokenKind.CONJ: ScopeCategory.CONJUNCTION,
    TokenKind.NEG: ScopeCategory.NEGATION,
}


@dataclass(frozen=True, slots=True)
class Token:
    """One clause position: a surface form plus its category."""

    surface: str
    kind: TokenKind
    entry: LexEntry | None = None
    gradable_override: bool | None = None

    def __post_init__(self) -> None:
        if self.kind is TokenKind.ANGABE and self.entry is None:
            raise ValueError("angabe tokens need a lexicon entry")
        if self.kind is not TokenKind.ANGABE and self.entry is not None:
            raise ValueError("only angabe tokens carry a lexicon entry")


def scope_category(token: Token) -> ScopeCategory | None:
    """Category the token offers as a modification target, if any."""
    if token.kind is TokenKind.ANGABE:
        assert token.entry is not None
        return ScopeCategory(token.entry.group.value)
    return _KIND_CATEGORY.get(token.kind)


def token_gradable(token: Token) -> bool:
    """Whether the token accepts a degree particle."""
    if token.gradable_override is not None:
        return token.gradable_override
    if token.kind is TokenKind.ANGABE:
        assert token.entry is not None
        return token.entry.gradable
    return token.kind in _DEFAULT_GRADABLE


def is_particle(token: Token) -> bool:
    """Whether the token can issue an attachment."""
    return (
        token.kind is TokenKind.ANGABE
        and token.entry is not None
        and token.entry.direction is not Direction.NONE
    )


def can_modify(
    particle: LexEntry, category: ScopeCategory, gradable: bool
) -> bool:
    """Whether a particle may modify a target of the given category.

    Sentence scope never forms a constituent attachment, so category
    "s" is always refused.
    """
    return (
        gradable
        and category is not ScopeCategory.SENTENCE
        and category in particle.scope
    )


@dataclass(frozen=True, slots=True)
class Attachment:
    """One particle bound to one target constituent."""

    particle_index: int
    target_index: int
    direction_used: Direction
    distant: bool

    def __post_init__(self) -> None:
        if self.particle_index == self.target_index:
            raise ValueError("a particle cannot modify itself")
        expected = (
            Direction.PRE
            if self.particle_index < self.target_index
            else Direction.POST
        )
        if self.direction_used is not expected:
            raise ValueError("direction_used contradicts the token positions")
        if self.distant != (abs(self.particle_index - self.target_index) > 1):
            raise ValueError("distant flag contradicts the token positions")


@dataclass(frozen=True, slots=True)
class ScopeParse:
    """Attachments found in a clause plus the positions left unbound."""

    attachments: tuple[Attachment, ...]
    free: tuple[int, ...]


def _accepts(particle: LexEntry, tokens: Sequence[Token], j: int) -> bool:
    category = scope_category(tokens[j])
    return category is not None and can_modify(
        particle, category, token_gradable(tokens[j])
    )


def candidate_targets(tokens: Sequence[Token], i: int) -> list[int]:
    """Admissible targets for the particle at ``i``, best first.

    Adjacent positions come first, restricted to the side the particle
    direction allows (a both-direction particle prefers the following
    position).  A distance-capable particle then considers every
    non-adjacent position, nearest first, leftward before rightward.
    """
    entry = tokens[i].entry
    assert entry is not None
    adjacent: list[int] = []
    if entry.direction in (Direction.PRE, Direction.BOTH):
        adjacent.append(i + 1)
    if entry.direction in (Direction.POST, Direction.BOTH):
        adjacent.append(i - 1)
    ordered = [j for j in adjacent if 0 <= j < len(tokens)]
    if entry.distance:
        ordered.extend(sorted(
            (j for j in range(len(tokens)) if abs(j - i) > 1),
            key=lambda j: (abs(j - i), 0 if j < i else 1),
        ))
    return [j for j in ordered if _accepts(entry, tokens, j)]


def attach(tokens: Sequence[Token]) -> ScopeParse:
    """Bind particles to targets across the clause.

    Maximizes the number of bound particles; among equally large
    solutions the particles, taken left to right, each get the earliest
    candidate their preference order admits.  Unbound particles and all
    other tokens are reported as free.
    """
    tokens = list(tokens)
    particles = [i for i, token in enumerate(tokens) if is_particle(token)]
    preferences = [candidate_targets(tokens, i) for i in particles]

    best_choice: list[int | None] | None = None
    best_score: tuple[int, tuple[int, ...]] | None = None

    def search(k: int, used: set[int], choice: list[int | None],
               ranks: list[int], bound: int) -> None:
        nonlocal best_choice, best_score
        if best_score is not None and bound + (len(particles) - k) < -best_score[0]:
            return
        if k == len(particles):
            score = (-bound, tuple(ranks))
            if best_score is None or score < best_score:
                best_score = score
                best_choice = list(choice)
            return
        for rank, j in enumerate(preferences[k]):
            if j in used:
                continue
            used.add(j)
            choice.append(j)
            ranks.append(rank)
            search(k + 1, used, choice, ranks, bound + 1)
            ranks.pop()
            choice.pop()
            used.remove(j)
        choice.append(None)
        ranks.append(len(preferences[k]))
        search(k + 1, used, choice, ranks, bound)
        ranks.pop()
        choice.pop()

    search(0, set(), [], [], 0)
    assert best_choice is not None or not particles

    attachments: list[Attachment] = []
    taken: set[int] = set()
    for i, j in zip(particles, best_choice or []):
        if j is None:
            continue
        attachments.append(Attachment(
            particle_index=i,
            target_index=j,
            direction_used=Direction.PRE if i < j else Direction.POST,
            distant=abs(i - j) > 1,
        ))
        taken.update((i, j))
    free = tuple(i for i in range(len(tokens)) if i not in taken)
    return ScopeParse(tuple(attachments), free)


def vorfeld_constituent(particle: LexEntry, target: Token) -> bool:
    """Whether particle and target together may fill the Vorfeld.

    The pair stands adjacent by construction, so this reduces to the
    particle actually attaching to the target.
    """
    if particle.direction is Direction.NONE:
        return False
    category = scope_category(target)
    return category is not None and can_modify(
        particle, category, token_gradable(target)
    )
