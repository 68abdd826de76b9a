"""Lexicon parsing, validation, lookup, and serialization."""

from __future__ import annotations

import random

import pytest

from adverbia import (
    Case,
    Direction,
    LexEntry,
    Lexicon,
    MacroGroup,
    ScopeCategory,
    entry_to_dict,
    parse_lexicon,
    serialize_lexicon,
    validate_entry,
)
from adverbia.lexicon import HEADER
from helpers import random_lexicon

HEADER_LINE = "\t".join(HEADER)

LEIDER_ROW = "leider\t13\tpragm\t-\t+\ts\t-\t-\t-\t-\t-\t-\t-"


def parse_rows(*rows: str):
    return parse_lexicon("\n".join((HEADER_LINE,) + rows) + "\n")


def test_single_row():
    lexicon, diagnostics = parse_rows(LEIDER_ROW)
    assert diagnostics == []
    (entry,) = lexicon.entries
    assert entry.lemma == "leider"
    assert entry.classes == {13}
    assert entry.group is MacroGroup.PRAGMATIC
    assert not entry.rhematic and entry.vorfeld
    assert entry.scope == {ScopeCategory.SENTENCE}
    assert entry.direction is Direction.NONE
    assert not entry.distance and not entry.gradable
    assert entry.valence == frozenset()
    assert not entry.predicative and not entry.negatable and not entry.comparable
    assert entry.comment is None


def test_empty_input():
    lexicon, diagnostics = parse_lexicon("")
    assert len(lexicon) == 0
    assert diagnostics == []


def test_header_only():
    lexicon, diagnostics = parse_lexicon(HEADER_LINE + "\n")
    assert len(lexicon) == 0
    assert diagnostics == []


def test_comments_and_blank_lines_skipped():
    text = "# a comment\n\n" + HEADER_LINE + "\n# another\n\n" + LEIDER_ROW + "\n"
    lexicon, diagnostics = parse_lexicon(text)
    assert diagnostics == []
    assert len(lexicon) == 1


def test_missing_header_reported():
    lexicon, diagnostics = parse_lexicon(LEIDER_ROW + "\n")
    assert len(lexicon) == 0
    assert [d.code for d in diagnostics] == ["header"]
    assert diagnostics[0].line == 1


def test_wrong_column_count():
    lexicon, diagnostics = parse_rows("leider\t13\tpragm")
    assert len(lexicon) == 0
    (diag,) = diagnostics
    assert diag.code == "column_count" and diag.line == 2


def test_class_out_of_range_names_line():
    row = LEIDER_ROW.replace("\t13\t", "\t45\t")
    lexicon, diagnostics = parse_rows(LEIDER_ROW, row)
    assert [e.lemma for e in lexicon] == ["leider"]
    (diag,) = diagnostics
    assert diag.severity == "error"
    assert diag.code == "class_range"
    assert diag.line == 3


def test_every_bad_field_reported():
    row = "leider\tx\tnoun\tyes\t+\tzz\tup\t-\t-\tabl\t-\t-\t-"
    lexicon, diagnostics = parse_rows(row)
    assert len(lexicon) == 0
    codes = {d.code for d in diagnostics}
    assert codes == {
        "class_token", "group_token", "bool_token", "scope_token",
        "direction_token", "valence_token",
    }
    assert all(d.line == 2 for d in diagnostics)


def test_pp_only_class_rejected_in_file():
    row = LEIDER_ROW.replace("\t13\t", "\t23\t")
    lexicon, diagnostics = parse_rows(row)
    assert len(lexicon) == 0
    (diag,) = diagnostics
    assert diag.code == "pp_only_class" and diag.line == 2


def test_duplicate_reading_skipped():
    lexicon, diagnostics = parse_rows(LEIDER_ROW, LEIDER_ROW)
    assert len(lexicon) == 1
    (diag,) = diagnostics
    assert diag.code == "duplicate_reading" and diag.line == 3


def test_scope_dash_means_sentence_default():
    row = LEIDER_ROW.replace("\ts\t", "\t-\t")
    lexicon, diagnostics = parse_rows(row)
    assert diagnostics == []
    assert lexicon.entries[0].scope == {ScopeCategory.SENTENCE}


def test_comment_split():
    row = "bloß (nur)\t38\tsit\t-\t+\ts,ap,npp,cp,man,sit\tpre\t+\t-\t-\t-\t+\t-"
    lexicon, diagnostics = parse_rows(row)
    assert diagnostics == []
    (entry,) = lexicon.entries
    assert entry.lemma == "bloß"
    assert entry.comment == "nur"


def test_multi_class_and_valence_tokens():
    row = "wieder\t26/40\tsit\t-\t-\ts\t-\t-\t-\tgen,dat\t-\t-\t-"
    lexicon, diagnostics = parse_rows(row)
    assert diagnostics == []
    (entry,) = lexicon.entries
    assert entry.classes == {26, 40}
    assert entry.valence == {Case.GENITIVE, Case.DATIVE}


def test_sample_fixture_clean(sample):
    assert len(sample) == 12
    assert [e.lemma for e in sample][:3] == ["abseits", "bereits", "bloß"]
    assert sample.lookup("ja")[0].comment == "Abtönung"


def test_lookup_is_exact_and_ordered(sample):
    readings = sample.lookup("einfach")
    assert [min(e.classes) for e in readings] == [18, 43]
    assert sample.lookup("Einfach") == []
    assert sample.lookup("fehlt") == []


def test_serialize_empty():
    assert serialize_lexicon(Lexicon(())) == HEADER_LINE + "\n"


def test_round_trip_sample(sample):
    reparsed, diagnostics = parse_lexicon(serialize_lexicon(sample))
    assert diagnostics == []
    assert reparsed.entries == sample.entries


def test_round_trip_random_entries():
    rng = random.Random(1311)
    lexicon = random_lexicon(rng, 200)
    reparsed, diagnostics = parse_lexicon(serialize_lexicon(lexicon))
    assert not any(d.severity == "error" for d in diagnostics)
    assert reparsed.entries == lexicon.entries


def test_parse_is_total_on_garbage():
    rng = random.Random(97)
    alphabet = "ab\t\n+-/,()#s@ä 1234"
    for _ in range(300):
        text = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 120)))
        lexicon, diagnostics = parse_lexicon(text)
        assert isinstance(diagnostics, list)
        assert all(isinstance(e, LexEntry) for e in lexicon)


def entry(**overrides) -> LexEntry:
    base = dict(lemma="probe", classes=frozenset({26}), group=MacroGroup.SITUATIVE)
    base.update(overrides)
    return LexEntry(**base)


def test_validate_clean_entry():
    assert validate_entry(entry(classes={39})) == []


def test_validate_pp_only_class():
    diagnostics = validate_entry(entry(classes={23}))
    assert [d.code for d in diagnostics] == ["pp_only_class"]
    assert diagnostics[0].severity == "error"


def test_validate_group_band_warning():
    diagnostics = validate_entry(entry(group=MacroGroup.MANNER))
    assert [(d.code, d.severity) for d in diagnostics] == [
        ("group_class_range", "warning"),
    ]


def test_validate_distance_needs_direction():
    bad = entry(
        scope={ScopeCategory.SENTENCE, ScopeCategory.SITUATIVE}, distance=True
    )
    assert [d.code for d in validate_entry(bad)] == ["distance_without_direction"]


def test_validate_sentence_scope_forbids_direction():
    bad = entry(direction=Direction.PRE)
    assert [d.code for d in validate_entry(bad)] == ["sentence_scope_direction"]


def test_entry_constructor_guards():
    with pytest.raises(ValueError):
        entry(lemma="  ")
    with pytest.raises(ValueError):
        entry(classes=frozenset())
    with pytest.raises(ValueError):
        entry(classes={45})
    with pytest.raises(ValueError):
        entry(scope=frozenset())
    with pytest.raises(ValueError):
        entry(lemma="a\tb")


def test_lexicon_rejects_duplicate_readings():
    with pytest.raises(ValueError):
        Lexicon((entry(), entry()))


def test_entry_to_dict_is_canonical():
    made = entry(
        scope={ScopeCategory.SITUATIVE, ScopeCategory.SENTENCE},
        valence={Case.DATIVE, Case.GENITIVE},
        classes={40, 26},
    )
    view = entry_to_dict(made)
    assert view["scope"] == ["s", "sit"]
    assert view["valence"] == ["gen", "dat"]
    assert view["classes"] == [26, 40]
