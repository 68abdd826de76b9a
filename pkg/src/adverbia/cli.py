"""Command line front end.

Every subcommand works against a lexicon file given by --lexicon or the
ADVERBIA_LEXICON environment variable.  Structured input arrives as
JSON on stdin (or inline via --payload); all output is JSON on stdout.

Exit codes: 0 success, 1 unreadable file or failed validation,
2 malformed payload, 3 disambiguation left no readings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from .analytics import (
    Mismatch,
    diff_against_reference,
    parse_reference,
    summarize,
)
from .disambiguate import (
    CARRIES_FOCUS,
    FOLLOWS_NEGATION,
    IN_VORFELD,
    PREDICATIVE_POSITION,
    Cue,
    complement_case,
    filter_by_context,
    graduated_by,
)
from .lexicon import (
    Case,
    Diagnostic,
    LexEntry,
    Lexicon,
    entry_to_dict,
    parse_lexicon,
)
from .linearize import (
    NEGATION_CLASS,
    AngabeSeq,
    OrderViolation,
    builtin_negation,
    check_order,
    order_indices,
)
from .scope import ScopeParse, Token, TokenKind, attach

EXIT_OK = 0
EXIT_FILE = 1
EXIT_PAYLOAD = 2
EXIT_NO_READING = 3

ENV_LEXICON = "ADVERBIA_LEXICON"


class _CliError(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code


def _print_json(payload: Any) -> None:
    print(json.dumps(payload, ensure_ascii=False, indent=2))


def _read_text(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise _CliError(EXIT_FILE, f"cannot read {path}: {exc}") from exc


def _load_lexicon(args: argparse.Namespace) -> tuple[Lexicon, list[Diagnostic]]:
    path = args.lexicon or os.environ.get(ENV_LEXICON)
    if not path:
        raise _CliError(
            EXIT_FILE, f"no lexicon given; use --lexicon or {ENV_LEXICON}"
        )
    return parse_lexicon(_read_text(path))


def _payload(args: argparse.Namespace) -> Any:
    raw = args.payload if args.payload is not None else sys.stdin.read()
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise _CliError(EXIT_PAYLOAD, f"malformed payload JSON: {exc}") from exc


def _resolve(lexicon: Lexicon, lemma: str, cls: int | None) -> LexEntry:
    readings = lexicon.lookup(lemma)
    if cls is not None:
        readings = [r for r in readings if cls in r.classes]
    if not readings and lemma == builtin_negation().lemma and cls in (None, NEGATION_CLASS):
        return builtin_negation()
    if not readings:
        wanted = lemma if cls is None else f"{lemma}@{cls}"
        raise _CliError(EXIT_PAYLOAD, f"no reading matches {wanted!r}")
    if len(readings) > 1:
        raise _CliError(
            EXIT_PAYLOAD,
            f"{lemma!r} is ambiguous; qualify it as lemma@class",
        )
    return readings[0]


def _resolve_selector(lexicon: Lexicon, selector: Any) -> LexEntry:
    if not isinstance(selector, str) or not selector:
        raise _CliError(EXIT_PAYLOAD, f"selectors must be strings, got {selector!r}")
    lemma, sep, cls_token = selector.rpartition("@")
    if not sep:
        return _resolve(lexicon, selector, None)
    if not cls_token.isdigit():
        raise _CliError(EXIT_PAYLOAD, f"bad class in selector {selector!r}")
    return _resolve(lexicon, lemma, int(cls_token))


def _diagnostic_to_dict(diag: Diagnostic) -> dict:
    return {
        "severity": diag.severity,
        "code": diag.code,
        "message": diag.message,
        "line": diag.line,
        "lemma": diag.lemma,
    }


def _violation_to_dict(violation: OrderViolation) -> dict:
    return {
        "kind": violation.kind,
        "positions": list(violation.positions),
        "detail": violation.detail,
    }


def _parse_to_dict(tokens: Sequence[Token], parse: ScopeParse) -> dict:
    attachments = [
        {
            "particle": tokens[a.particle_index].surface,
            "target": tokens[a.target_index].surface,
            "particle_index": a.particle_index,
            "target_index": a.target_index,
            "direction": a.direction_used.value,
            "distant": a.distant,
        }
        for a in parse.attachments
    ]
    return {"attachments": attachments, "free": list(parse.free)}


def cmd_validate(args: argparse.Namespace) -> int:
    _, diagnostics = _load_lexicon(args)
    _print_json([_diagnostic_to_dict(d) for d in diagnostics])
    return EXIT_OK if not any(d.is_error for d in diagnostics) else EXIT_FILE


def cmd_lookup(args: argparse.Namespace) -> int:
    lexicon, _ = _load_lexicon(args)
    _print_json([entry_to_dict(e) for e in lexicon.lookup(args.lemma)])
    return EXIT_OK


def cmd_order(args: argparse.Namespace) -> int:
    lexicon, _ = _load_lexicon(args)
    payload = _payload(args)
    if not isinstance(payload, list):
        raise _CliError(EXIT_PAYLOAD, "order expects a JSON array of selectors")
    entries = [_resolve_selector(lexicon, s) for s in payload]
    _print_json([payload[i] for i in order_indices(entries)])
    return EXIT_OK


def cmd_check_order(args: argparse.Namespace) -> int:
    lexicon, _ = _load_lexicon(args)
    payload = _payload(args)
    if isinstance(payload, list):
        payload = {"items": payload}
    if not isinstance(payload, dict) or not isinstance(payload.get("items"), list):
        raise _CliError(
            EXIT_PAYLOAD,
            'check-order expects {"items": [...], "focus"?, "vorfeld"?}',
        )
    entries = [_resolve_selector(lexicon, s) for s in payload["items"]]
    focus = payload.get("focus")
    vorfeld = payload.get("vorfeld")
    try:
        seq = AngabeSeq(tuple(entries), focus=focus, vorfeld=vorfeld)
    except (TypeError, ValueError) as exc:
        raise _CliError(EXIT_PAYLOAD, f"bad sequence: {exc}") from exc
    _print_json([_violation_to_dict(v) for v in check_order(seq)])
    return EXIT_OK


def _token_from_dict(lexicon: Lexicon, spec: Any) -> Token:
    if not isinstance(spec, dict) or "surface" not in spec or "kind" not in spec:
        raise _CliError(EXIT_PAYLOAD, f"bad token {spec!r}")
    try:
        kind = TokenKind(spec["kind"])
    except ValueError:
        raise _CliError(EXIT_PAYLOAD, f"unknown token kind {spec['kind']!r}") from None
    entry = None
    if kind is TokenKind.ANGABE:
        lemma = spec.get("lemma", spec["surface"])
        cls = spec.get("class")
        if cls is not None and not isinstance(cls, int):
            raise _CliError(EXIT_PAYLOAD, f"bad class in token {spec!r}")
        entry = _resolve(lexicon, lemma, cls)
    gradable = spec.get("gradable")
    if gradable is not None and not isinstance(gradable, bool):
        raise _CliError(EXIT_PAYLOAD, f"bad gradable flag in token {spec!r}")
    return Token(
        surface=spec["surface"], kind=kind, entry=entry,
        gradable_override=gradable,
    )


def cmd_scope(args: argparse.Namespace) -> int:
    lexicon, _ = _load_lexicon(args)
    payload = _payload(args)
    if not isinstance(payload, list):
        raise _CliError(EXIT_PAYLOAD, "scope expects a JSON array of tokens")
    tokens = [_token_from_dict(lexicon, spec) for spec in payload]
    _print_json(_parse_to_dict(tokens, attach(tokens)))
    return EXIT_OK


def _parse_cue(lexicon: Lexicon, text: str) -> Cue:
    name, _, argument = text.partition(":")
    plain = {
        "in_vorfeld": IN_VORFELD,
        "predicative_position": PREDICATIVE_POSITION,
        "follows_negation": FOLLOWS_NEGATION,
        "carries_focus": CARRIES_FOCUS,
    }
    if name in plain:
        if argument:
            raise _CliError(EXIT_PAYLOAD, f"cue {name} takes no argument")
        return plain[name]
    if name == "complement_case":
        try:
            return complement_case(Case(argument))
        except ValueError:
            raise _CliError(EXIT_PAYLOAD, f"unknown case {argument!r}") from None
    if name == "graduated_by":
        if not argument:
            raise _CliError(EXIT_PAYLOAD, "graduated_by needs a particle selector")
        return graduated_by(_resolve_selector(lexicon, argument))
    raise _CliError(EXIT_PAYLOAD, f"unknown cue {name!r}")


def cmd_disambiguate(args: argparse.Namespace) -> int:
    lexicon, _ = _load_lexicon(args)
    cues = [_parse_cue(lexicon, text) for text in args.cue]
    survivors = filter_by_context(lexicon.lookup(args.lemma), cues)
    _print_json([entry_to_dict(e) for e in survivors])
    return EXIT_OK if survivors else EXIT_NO_READING


def cmd_summarize(args: argparse.Namespace) -> int:
    lexicon, _ = _load_lexicon(args)
    _print_json([
        {
            "class": s.key,
            "count": s.count,
            "cells": {f: s.cells[f].to_dict() for f in s.cells},
        }
        for s in summarize(lexicon)
    ])
    return EXIT_OK


def _mismatch_to_dict(mismatch: Mismatch) -> dict:
    return {
        "class": mismatch.class_key,
        "feature": mismatch.feature,
        "expected": mismatch.expected,
        "observed": mismatch.observed.to_dict(),
    }


def cmd_diff(args: argparse.Namespace) -> int:
    lexicon, _ = _load_lexicon(args)
    try:
        reference = parse_reference(_read_text(args.reference))
    except ValueError as exc:
        raise _CliError(EXIT_FILE, f"bad reference file: {exc}") from exc
    mismatches = diff_against_reference(summarize(lexicon), reference)
    _print_json([_mismatch_to_dict(m) for m in mismatches])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adverbia",
        description="Query and check a German adverbial lexicon.",
    )
    parser.add_argument(
        "--lexicon",
        help=f"path to the lexicon file (default: ${ENV_LEXICON})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("validate", help="parse the lexicon and print diagnostics")

    lookup = sub.add_parser("lookup", help="print all readings of a lemma")
    lookup.add_argument("lemma")

    order = sub.add_parser("order", help="sort selectors by position class")
    order.add_argument("--payload", help="inline JSON instead of stdin")

    check = sub.add_parser("check-order", help="report violations in a sequence")
    check.add_argument("--payload", help="inline JSON instead of stdin")

    scope = sub.add_parser("scope", help="attach degree particles in a clause")
    scope.add_argument("--payload", help="inline JSON instead of stdin")

    disambiguate = sub.add_parser(
        "disambiguate", help="filter readings of a lemma by context cues"
    )
    disambiguate.add_argument("lemma")
    disambiguate.add_argument(
        "--cue", action="append", default=[],
        help="context cue, e.g. in_vorfeld or complement_case:gen",
    )

    sub.add_parser("summarize", help="per-class feature summary of the lexicon")

    diff = sub.add_parser("diff", help="compare the lexicon against a reference profile")
    diff.add_argument("--reference", required=True, help="reference profile file")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "validate": cmd_validate,
        "lookup": cmd_lookup,
        "order": cmd_order,
        "check-order": cmd_check_order,
        "scope": cmd_scope,
        "disambiguate": cmd_disambiguate,
        "summarize": cmd_summarize,
        "diff": cmd_diff,
    }
    try:
        return handlers[args.command](args)
    except _CliError as error:
        print(f"adverbia: {error}", file=sys.stderr)
        return error.code


if __name__ == "__main__":
    sys.exit(main())
