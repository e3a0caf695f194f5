"""End-to-end pipeline: prices -> crossings -> braid -> closure -> invariants -> lookup."""

from __future__ import annotations

import csv
import io
import json
import warnings
from dataclasses import dataclass, field
from datetime import date
from typing import Sequence

from .braid import BraidWord, cyclic_reduce, interpret_word, word_from_crossings, writhe
from .classify import KnotTableEntry, load_bundled_table, lookup_matches
from .crossings import CrossingEvent, detect_crossings
from .invariants import (
    CrossingLimitExceeded,
    SkeinBudgetExceeded,
    alexander,
    conway,
    jones,
)
from .link import close_braid
from .market import PriceTable, rank_sequence
from .polynomial import LaurentPoly

__all__ = [
    "SCHEMA_VERSION",
    "PipelineError",
    "PipelineReport",
    "WindowedResult",
    "run_pipeline",
    "windowed_report",
    "braid_report",
]

SCHEMA_VERSION = 1


class PipelineError(ValueError):
    """The requested window cannot be analysed."""


@dataclass
class InvariantBlock:
    jones: LaurentPoly | None = None
    conway: LaurentPoly | None = None
    alexander: LaurentPoly | None = None
    classification: list[str] = field(default_factory=list)
    refused: bool = False
    warnings: list[str] = field(default_factory=list)


def _invariants(word: BraidWord, table: Sequence[KnotTableEntry],
                max_crossings: int | None) -> tuple[int, InvariantBlock]:
    diagram = close_braid(word)
    block = InvariantBlock()
    try:
        block.jones = jones(diagram, max_crossings)
        block.conway = conway(word)
        block.alexander = alexander(word)
    except (CrossingLimitExceeded, SkeinBudgetExceeded) as exc:
        block.jones = block.conway = block.alexander = None
        block.refused = True
        block.warnings.append(f"invariants refused: {exc}")
        return diagram.component_count, block
    matches = lookup_matches(table, block.alexander, block.jones, diagram.component_count)
    block.classification = [m.label for m in matches]
    if not matches:
        block.warnings.append("no table entry matches these invariants")
    elif len(matches) > 1:
        block.warnings.append("ambiguous classification: " + ", ".join(m.entry.name for m in matches))
    return diagram.component_count, block


def _render(p: LaurentPoly | None, var: str = "t") -> str | None:
    return None if p is None else p.render(var)


@dataclass
class PipelineReport:
    window: tuple[date, date]
    tickers: list[str]
    crossing_events: list[CrossingEvent]
    braid_word: BraidWord
    reduced_word: BraidWord
    writhe: int
    component_count: int
    jones: LaurentPoly | None
    conway: LaurentPoly | None
    alexander: LaurentPoly | None
    classification: list[str]
    trend_summary: dict
    warnings: list[str]

    @property
    def refused(self) -> bool:
        return self.jones is None

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "window": {"start": self.window[0].isoformat(), "end": self.window[1].isoformat()},
            "tickers": list(self.tickers),
            "strand_count": self.braid_word.strand_count,
            "crossing_events": [ev.to_json() for ev in self.crossing_events],
            "braid_word": self.braid_word.render(),
            "braid_letters": list(self.braid_word.letters),
            "reduced_word": self.reduced_word.render(),
            "reduced_letters": list(self.reduced_word.letters),
            "writhe": self.writhe,
            "component_count": self.component_count,
            "jones": _render(self.jones),
            "conway": _render(self.conway, "z"),
            "alexander": _render(self.alexander),
            "classification": list(self.classification),
            "trend_summary": {t: s.to_json() for t, s in self.trend_summary.items()},
            "warnings": list(self.warnings),
        }

    def render_json(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    def render_text(self) -> str:
        lines = [
            f"window        {self.window[0].isoformat()} .. {self.window[1].isoformat()}",
            f"tickers       {' '.join(self.tickers)}",
            f"crossings     {len(self.crossing_events)}",
        ]
        for ev in self.crossing_events:
            kind = "over " if ev.sign > 0 else "under"
            lines.append(
                f"  {ev.date_from.isoformat()} -> {ev.date_to.isoformat()}  pos {ev.position}  "
                f"{ev.left_ticker} x {ev.right_ticker}  {kind}  "
                f"d({ev.left_ticker})={ev.delta_left:.2f} d({ev.right_ticker})={ev.delta_right:.2f}"
            )
        lines += [
            f"braid word    {self.braid_word.render()}   ({self.braid_word.render_sigma()})",
            f"reduced       {self.reduced_word.render()}",
            f"writhe        {self.writhe}",
            f"components    {self.component_count}",
            f"jones         {_render(self.jones) or '-'}",
            f"conway        {_render(self.conway, 'z') or '-'}",
            f"alexander     {_render(self.alexander) or '-'}",
            f"classified as {', '.join(self.classification) or 'unrecognised'}",
            "trends",
        ]
        for t, s in self.trend_summary.items():
            lines.append(f"  {t:<8} {s.trend:<8} over {s.overcrossings}  under {s.undercrossings}")
        for w in self.warnings:
            lines.append(f"warning: {w}")
        return "\n".join(lines) + "\n"


def run_pipeline(table: PriceTable, start: date | None = None, end: date | None = None, *,
                 reduce: bool = True, max_crossings: int | None = None,
                 knot_table: Sequence[KnotTableEntry] | None = None) -> PipelineReport:
    """Analyse the inclusive date window ``[start, end]`` of ``table``.

    Strands are labelled by the window's first-date arrangement.  Invariants
    are computed on the cyclically reduced word unless ``reduce`` is false.
    A crossing-budget refusal leaves the polynomials as None and adds a
    warning instead of raising.
    """
    window = table.between(start, end)
    if len(window.dates) < 2:
        raise PipelineError("a window needs at least two trading days")
    if knot_table is None:
        knot_table = load_bundled_table()

    messages: list[str] = []
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        events = detect_crossings(window, rank_sequence(window))
    messages.extend(str(w.message) for w in caught)

    n = len(window.tickers)
    word = word_from_crossings(events, n)
    reduced = cyclic_reduce(word) if reduce else word
    components, block = _invariants(reduced, knot_table, max_crossings)
    messages.extend(block.warnings)
    return PipelineReport(
        window=(window.dates[0], window.dates[-1]),
        tickers=list(window.tickers),
        crossing_events=events,
        braid_word=word,
        reduced_word=reduced,
        writhe=writhe(word),
        component_count=components,
        jones=block.jones,
        conway=block.conway,
        alexander=block.alexander,
        classification=block.classification,
        trend_summary=interpret_word(word, window.tickers),
        warnings=messages,
    )


@dataclass
class WindowedResult:
    reports: list[PipelineReport]
    summary: list[dict]
    warnings: list[str]

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "reports": [r.to_json() for r in self.reports],
            "summary": self.summary,
            "warnings": self.warnings,
        }

    def render_json(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    def summary_csv(self) -> str:
        cols = ["window_start", "window_end", "crossings", "writhe", "word_length",
                "reduced_length", "components", "classification", "status"]
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        writer.writeheader()
        for row in self.summary:
            writer.writerow({k: row.get(k, "") for k in cols})
        return buf.getvalue()


def windowed_report(table: PriceTable, window_length: int, stride: int, *,
                    max_crossings: int | None = None,
                    knot_table: Sequence[KnotTableEntry] | None = None) -> WindowedResult:
    """Slide a window of ``window_length`` trading rows by ``stride`` rows."""
    if window_length < 2:
        raise PipelineError("window length must be at least two trading days")
    if stride < 1:
        raise PipelineError("stride must be positive")
    if window_length > len(table.dates):
        raise PipelineError(f"window length {window_length} exceeds the {len(table.dates)} available rows")
    if knot_table is None:
        knot_table = load_bundled_table()

    reports: list[PipelineReport] = []
    summary: list[dict] = []
    notes: list[str] = []
    for first in range(0, len(table.dates) - window_length + 1, stride):
        last = first + window_length - 1
        span = (table.dates[first], table.dates[last])
        try:
            rep = run_pipeline(table, *span, max_crossings=max_crossings, knot_table=knot_table)
        except (PipelineError, ValueError) as exc:
            notes.append(f"window {span[0].isoformat()}..{span[1].isoformat()} failed: {exc}")
            summary.append({"window_start": span[0].isoformat(), "window_end": span[1].isoformat(),
                            "status": "error"})
            continue
        reports.append(rep)
        summary.append({
            "window_start": span[0].isoformat(),
            "window_end": span[1].isoformat(),
            "crossings": len(rep.crossing_events),
            "writhe": rep.writhe,
            "word_length": len(rep.braid_word),
            "reduced_length": len(rep.reduced_word),
            "components": rep.component_count,
            "classification": ";".join(rep.classification),
            "status": "refused" if rep.refused else "ok",
        })
    return WindowedResult(reports, summary, notes)


def braid_report(word: BraidWord, *, max_crossings: int | None = None,
                 knot_table: Sequence[KnotTableEntry] | None = None) -> dict:
    """Invariants of a braid word entered directly."""
    if knot_table is None:
        knot_table = load_bundled_table()
    reduced = cyclic_reduce(word)
    components, block = _invariants(reduced, knot_table, max_crossings)
    return {
        "schema_version": SCHEMA_VERSION,
        "strand_count": word.strand_count,
        "braid_word": word.render(),
        "reduced_word": reduced.render(),
        "writhe": writhe(word),
        "component_count": components,
        "jones": _render(block.jones),
        "conway": _render(block.conway, "z"),
        "alexander": _render(block.alexander),
        "classification": block.classification,
        "warnings": block.warnings,
    }
