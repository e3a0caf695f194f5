"""Knot and link identification by invariant lookup.

Table file format (one entry per line, ``#`` starts a comment)::

    name|components|crossing_number|alexander|jones|note

``alexander`` and ``jones`` are ``<lowest exponent>:<c0>,<c1>,...`` with
consecutive coefficients one power of t apart, lowest first; the exponent may
be a fraction such as ``-1/2``.  A bare ``0`` is the zero polynomial and an
empty ``jones`` field means "not recorded".  ``note`` is optional free text.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Iterable, TextIO

from .polynomial import QUARTER, LaurentPoly, alexander_normalize

__all__ = [
    "KnotTableEntry",
    "TableFormatError",
    "Match",
    "load_table",
    "load_bundled_table",
    "lookup",
    "lookup_matches",
    "encode_coeffs",
    "decode_coeffs",
    "format_entry",
]

TABLE_VERSION = "knotmarket-table 1"


class TableFormatError(ValueError):
    pass


@dataclass(frozen=True)
class KnotTableEntry:
    name: str
    crossing_number: int
    component_count: int
    alexander_normalized: LaurentPoly
    jones: LaurentPoly | None = None
    chirality_note: str = ""

    def __post_init__(self) -> None:
        if self.crossing_number < 0:
            raise TableFormatError(f"{self.name}: negative crossing number")
        if self.component_count < 1:
            raise TableFormatError(f"{self.name}: component count must be at least 1")
        a = self.alexander_normalized
        if not a.is_zero() and alexander_normalize(a) != a:
            raise TableFormatError(f"{self.name}: Alexander polynomial is not in canonical form")


@dataclass(frozen=True)
class Match:
    entry: KnotTableEntry
    mirrored: bool  # matched only after t -> 1/t on the Jones polynomial

    @property
    def label(self) -> str:
        note = self.entry.chirality_note
        if self.mirrored:
            return f"{self.entry.name} / mirror of {note}" if note else f"{self.entry.name} (mirror)"
        return f"{self.entry.name} / {note}" if note else self.entry.name


def encode_coeffs(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    lo, hi = p.min_quarters, p.max_quarters
    if (hi - lo) % QUARTER:
        raise ValueError(f"exponents of {p} are not one power of t apart")
    coeffs = [p.coefficient(q) for q in range(lo, hi + 1, QUARTER)]
    return f"{Fraction(lo, QUARTER)}:" + ",".join(str(c) for c in coeffs)


def decode_coeffs(text: str) -> LaurentPoly:
    text = text.strip()
    if text == "0":
        return LaurentPoly()
    try:
        offset, body = text.split(":")
        start = Fraction(offset) * QUARTER
        coeffs = [int(c) for c in body.split(",")]
    except ValueError:
        raise TableFormatError(f"bad coefficient field {text!r}") from None
    if start.denominator != 1:
        raise TableFormatError(f"exponent offset {offset!r} is not a multiple of 1/4")
    if not coeffs or coeffs[0] == 0 or coeffs[-1] == 0:
        raise TableFormatError(f"coefficient list {text!r} must start and end with a nonzero value")
    return LaurentPoly({int(start) + QUARTER * k: c for k, c in enumerate(coeffs)})


def format_entry(e: KnotTableEntry) -> str:
    jones = "" if e.jones is None else encode_coeffs(e.jones)
    fields = [e.name, str(e.component_count), str(e.crossing_number),
              encode_coeffs(e.alexander_normalized), jones]
    if e.chirality_note:
        fields.append(e.chirality_note)
    return "|".join(fields)


def load_table(source: TextIO | str | Iterable[str]) -> list[KnotTableEntry]:
    lines = source.splitlines() if isinstance(source, str) else source
    entries = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("|")
        if len(fields) not in (5, 6):
            raise TableFormatError(f"line {lineno}: expected 5 or 6 fields, got {len(fields)}")
        name = fields[0].strip()
        if not name:
            raise TableFormatError(f"line {lineno}: empty name")
        try:
            components = int(fields[1])
            crossings = int(fields[2])
        except ValueError:
            raise TableFormatError(f"line {lineno}: non-integer count") from None
        jones = decode_coeffs(fields[4]) if fields[4].strip() else None
        note = fields[5].strip() if len(fields) == 6 else ""
        try:
            entries.append(KnotTableEntry(name, crossings, components,
                                          decode_coeffs(fields[3]), jones, note))
        except TableFormatError as exc:
            raise TableFormatError(f"line {lineno}: {exc}") from None
    return entries


def load_bundled_table() -> list[KnotTableEntry]:
    text = resources.files("knotmarket.data").joinpath("knot_table.txt").read_text(encoding="utf-8")
    return load_table(text)


def lookup_matches(table: Iterable[KnotTableEntry], alexander: LaurentPoly,
                   jones: LaurentPoly | None, components: int) -> list[Match]:
    alex = alexander if alexander.is_zero() else alexander_normalize(alexander)
    found = []
    for e in table:
        if e.component_count != components or e.alexander_normalized != alex:
            continue
        if jones is None or e.jones is None:
            found.append(Match(e, False))
        elif jones == e.jones:
            found.append(Match(e, False))
        elif jones.mirror() == e.jones:
            found.append(Match(e, True))
    return found


def lookup(table: Iterable[KnotTableEntry], alexander: LaurentPoly,
           jones: LaurentPoly | None, components: int) -> list[str]:
    """Names of every entry consistent with the given invariants.

    An empty list means unrecognised; more than one name means the
    invariants do not separate the candidates.
    """
    return [m.entry.name for m in lookup_matches(table, alexander, jones, components)]
