"""Shared generators and brute-force oracles for the test suite.

The oracles deliberately avoid the library's search code: ordering is
checked against an exhaustive permutation scan, particle binding
against a flat enumeration of every assignment.  Both recompute their
own preference data from raw feature values.
"""

from __future__ import annotations

import itertools
import random
from typing import Sequence

from adverbia import (
    CARRIES_FOCUS,
    FOLLOWS_NEGATION,
    IN_VORFELD,
    PREDICATIVE_POSITION,
    Case,
    Cue,
    Direction,
    LexEntry,
    Lexicon,
    MacroGroup,
    ScopeCategory,
    ScopeParse,
    Token,
    TokenKind,
    complement_case,
    graduated_by,
)
from adverbia.lexicon import CLASS_MAX, CLASS_MIN, PP_ONLY_CLASSES
from adverbia.scope import Attachment

LETTERS = "abcdefghijklmnopqrstuvwxyzäöüß"

ALL_SIMPLE_CUES = (IN_VORFELD, PREDICATIVE_POSITION, FOLLOWS_NEGATION, CARRIES_FOCUS)

VALID_CLASSES = sorted(set(range(CLASS_MIN, CLASS_MAX + 1)) - PP_ONLY_CLASSES)

NON_ANGABE_KINDS = (
    TokenKind.NP, TokenKind.PP, TokenKind.AP, TokenKind.CP,
    TokenKind.CONJ, TokenKind.NEG, TokenKind.VERB, TokenKind.OTHER,
)


def reading(lexicon: Lexicon, lemma: str, cls: int) -> LexEntry:
    """The unique reading of ``lemma`` belonging to position class ``cls``."""
    matches = [e for e in lexicon.lookup(lemma) if cls in e.classes]
    assert len(matches) == 1, f"{lemma}@{cls}: {len(matches)} readings"
    return matches[0]


def random_word(rng: random.Random, low: int = 1, high: int = 9) -> str:
    return "".join(rng.choice(LETTERS) for _ in range(rng.randint(low, high)))


def random_entry(rng: random.Random, lemma: str | None = None) -> LexEntry:
    """A structurally valid entry; may still draw group/class warnings."""
    scope = frozenset(rng.sample(list(ScopeCategory), rng.randint(1, 4)))
    if scope == {ScopeCategory.SENTENCE}:
        direction = Direction.NONE
    else:
        direction = rng.choice(list(Direction))
    return LexEntry(
        lemma=lemma or random_word(rng),
        classes=frozenset(rng.sample(VALID_CLASSES, rng.choice((1, 1, 1, 2)))),
        group=rng.choice(list(MacroGroup)),
        rhematic=rng.random() < 0.5,
        vorfeld=rng.random() < 0.5,
        scope=scope,
        direction=direction,
        distance=direction is not Direction.NONE and rng.random() < 0.3,
        gradable=rng.random() < 0.5,
        valence=frozenset(rng.sample(list(Case), rng.choice((0, 0, 0, 1, 1, 2)))),
        predicative=rng.random() < 0.5,
        negatable=rng.random() < 0.5,
        comparable=rng.random() < 0.5,
        comment=random_word(rng, 1, 6) if rng.random() < 0.3 else None,
    )


def random_lexicon(rng: random.Random, size: int) -> Lexicon:
    entries: list[LexEntry] = []
    seen: set[tuple] = set()
    while len(entries) < size:
        entry = random_entry(rng)
        key = (entry.lemma, entry.classes, entry.group)
        if key not in seen:
            seen.add(key)
            entries.append(entry)
    return Lexicon(tuple(entries))


def random_tokens(
    rng: random.Random, pool: Sequence[LexEntry], length: int
) -> list[Token]:
    tokens: list[Token] = []
    for i in range(length):
        if rng.random() < 0.55:
            tokens.append(Token(
                surface=f"w{i}", kind=TokenKind.ANGABE, entry=rng.choice(pool),
            ))
        else:
            tokens.append(Token(
                surface=f"w{i}",
                kind=rng.choice(NON_ANGABE_KINDS),
                gradable_override=rng.choice((None, None, None, True, False)),
            ))
    return tokens


def random_cues(rng: random.Random, lexicon: Lexicon) -> list[Cue]:
    particles = [
        reading(lexicon, "nur", 38),
        reading(lexicon, "bloß", 38),
        reading(lexicon, "sehr", 43),
        reading(lexicon, "bereits", 39),
    ]
    options = list(ALL_SIMPLE_CUES)
    options += [complement_case(c) for c in Case]
    options += [graduated_by(p) for p in particles]
    return rng.sample(options, rng.randint(0, 4))


def order_oracle(entries: Sequence[LexEntry]) -> list[int]:
    """Lexicographically first permutation with nondecreasing sort keys.

    That is exactly what a stable sort by lowest class must produce.
    """
    keys = [min(e.classes) for e in entries]
    best: tuple[int, ...] | None = None
    for perm in itertools.permutations(range(len(entries))):
        ordered = [keys[i] for i in perm]
        if all(a <= b for a, b in zip(ordered, ordered[1:])):
            if best is None or perm < best:
                best = perm
    assert best is not None
    return list(best)


def _oracle_category(token: Token) -> str | None:
    if token.kind is TokenKind.ANGABE:
        return token.entry.group.value
    return {
        "np": "npp", "pp": "npp", "ap": "ap", "cp": "cp",
        "conj": "conj", "neg": "neg",
    }.get(token.kind.value)


def _oracle_gradable(token: Token) -> bool:
    if token.gradable_override is not None:
        return token.gradable_override
    if token.kind is TokenKind.ANGABE:
        return token.entry.gradable
    return token.kind.value in ("np", "pp", "ap", "cp", "conj", "neg")


def _oracle_preferences(tokens: Sequence[Token], i: int) -> list[int]:
    entry = tokens[i].entry
    slots: list[int] = []
    if entry.direction.value in ("pre", "both"):
        slots.append(i + 1)
    if entry.direction.value in ("post", "both"):
        slots.append(i - 1)
    slots = [j for j in slots if 0 <= j < len(tokens)]
    if entry.distance:
        distant = [j for j in range(len(tokens)) if abs(j - i) > 1]
        distant.sort(key=lambda j: (abs(j - i), 0 if j < i else 1))
        slots.extend(distant)
    admissible = []
    for j in slots:
        category = _oracle_category(tokens[j])
        if (
            category is not None
            and category != "s"
            and category in {c.value for c in tokens[i].entry.scope}
            and _oracle_gradable(tokens[j])
        ):
            admissible.append(j)
    return admissible


def attach_oracle(tokens: Sequence[Token]) -> ScopeParse:
    """Flat enumeration of every binding assignment, best one kept.

    Maximizes the number of bound particles, then compares the rank
    each particle's choice has in its own preference list, particles in
    clause order, unbound ranking last.
    """
    particles = [
        i for i, t in enumerate(tokens)
        if t.kind is TokenKind.ANGABE and t.entry.direction.value != "none"
    ]
    preferences = [_oracle_preferences(tokens, i) for i in particles]
    best = None
    for combo in itertools.product(*[p + [None] for p in preferences]):
        chosen = [j for j in combo if j is not None]
        if len(set(chosen)) != len(chosen):
            continue
        ranks = tuple(
            preferences[k].index(j) if j is not None else len(preferences[k])
            for k, j in enumerate(combo)
        )
        score = (-len(chosen), ranks)
        if best is None or score < best[0]:
            best = (score, combo)
    combo = best[1] if best is not None else ()
    attachments = []
    taken: set[int] = set()
    for i, j in zip(particles, combo):
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
