"""Braid words, link diagrams and knot polynomials built from stock-price crossings."""

from .braid import BraidWord, cyclic_reduce, free_reduce, interpret_word, writhe
from .classify import load_bundled_table, lookup
from .crossings import CrossingEvent, detect_crossings
from .invariants import alexander, conway, jones, jones_skein, kauffman_bracket
from .link import LinkDiagram, close_braid
from .market import PriceTable, parse_price_table, read_price_table
from .polynomial import LaurentPoly
from .report import PipelineReport, run_pipeline, windowed_report

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "CrossingEvent",
    "LaurentPoly",
    "LinkDiagram",
    "PipelineReport",
    "PriceTable",
    "alexander",
    "close_braid",
    "conway",
    "cyclic_reduce",
    "detect_crossings",
    "free_reduce",
    "interpret_word",
    "jones",
    "jones_skein",
    "kauffman_bracket",
    "load_bundled_table",
    "lookup",
    "parse_price_table",
    "read_price_table",
    "run_pipeline",
    "windowed_report",
    "writhe",
]
