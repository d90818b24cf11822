"""Exact character theory of graded based rings (Python bindings)."""

from _fusionkit import (
    Bundle,
    ParseError,
    Ring,
    character_table,
    crossed_s,
    load_bundle,
    multiplicities,
    parse_bundle,
    run_cli,
    twisted_characters,
    verify,
)

__all__ = [
    "Bundle",
    "ParseError",
    "Ring",
    "character_table",
    "crossed_s",
    "load_bundle",
    "multiplicities",
    "parse_bundle",
    "run_cli",
    "twisted_characters",
    "verify",
]
