"""Closing-price tables and their daily rank orderings."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from datetime import date, datetime
from decimal import Decimal, InvalidOperation
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence, TextIO

__all__ = [
    "PriceTable",
    "PriceTableError",
    "RankSequence",
    "parse_price_table",
    "read_price_table",
    "load_sample_prices",
    "SAMPLE_DATASET",
    "rank_sequence",
    "parse_date",
]

CENT = Decimal("0.01")
_DATE_FORMATS = ("%Y-%m-%d", "%m/%d/%Y")


class PriceTableError(ValueError):
    """Raised for malformed or inconsistent price input."""


def parse_date(text: str) -> date:
    text = text.strip()
    for fmt in _DATE_FORMATS:
        try:
            return datetime.strptime(text, fmt).date()
        except ValueError:
            continue
    raise PriceTableError(f"unrecognised date {text!r} (expected YYYY-MM-DD or M/D/YYYY)")


def _parse_price(text: str, where: str) -> Decimal:
    try:
        value = Decimal(text.strip())
    except InvalidOperation:
        raise PriceTableError(f"non-numeric price {text!r} at {where}") from None
    if not value.is_finite():
        raise PriceTableError(f"non-numeric price {text!r} at {where}")
    if value <= 0:
        raise PriceTableError(f"non-positive price {text!r} at {where}")
    fixed = value.quantize(CENT)
    if fixed != value:
        raise PriceTableError(f"price {text!r} at {where} has more than two decimal places")
    return fixed


@dataclass(frozen=True)
class PriceTable:
    """Daily closes: one row per date (ascending), one column per ticker."""

    tickers: tuple[str, ...]
    dates: tuple[date, ...]
    prices: tuple[tuple[Decimal, ...], ...]

    def __post_init__(self) -> None:
        if len(set(self.tickers)) != len(self.tickers):
            raise PriceTableError("duplicate ticker column")
        if len(self.prices) != len(self.dates):
            raise PriceTableError("row count does not match date count")
        for a, b in zip(self.dates, self.dates[1:]):
            if not a < b:
                raise PriceTableError(f"dates not strictly ascending at {b.isoformat()}")
        for day, row in zip(self.dates, self.prices):
            if len(row) != len(self.tickers):
                raise PriceTableError(f"row {day.isoformat()} has {len(row)} prices for {len(self.tickers)} tickers")
            if any(p <= 0 for p in row):
                raise PriceTableError(f"non-positive price on {day.isoformat()}")

    def __len__(self) -> int:
        return len(self.dates)

    def column_index(self, ticker: str) -> int:
        try:
            return self.tickers.index(ticker)
        except ValueError:
            raise KeyError(f"ticker {ticker!r} not in table") from None

    def row_index(self, day: date) -> int:
        try:
            return self.dates.index(day)
        except ValueError:
            raise KeyError(f"date {day.isoformat()} not in table") from None

    def price(self, ticker: str, day: date) -> Decimal:
        return self.prices[self.row_index(day)][self.column_index(ticker)]

    def rows(self, start: int, stop: int) -> PriceTable:
        """Row slice ``[start, stop)`` with columns re-arranged for its first date."""
        if not 0 <= start < stop <= len(self.dates):
            raise PriceTableError(f"invalid row range [{start}, {stop})")
        sub = PriceTable(self.tickers, self.dates[start:stop], self.prices[start:stop])
        return sub.arranged()

    def between(self, start: date | None = None, end: date | None = None) -> PriceTable:
        """Inclusive date window, re-arranged so its first date ascends left to right."""
        idx = [i for i, d in enumerate(self.dates)
               if (start is None or d >= start) and (end is None or d <= end)]
        if not idx:
            raise PriceTableError("date window contains no rows")
        return self.rows(idx[0], idx[-1] + 1)

    def arranged(self) -> PriceTable:
        """Columns ordered by the first date's prices, cheapest first (ties by symbol)."""
        if not self.dates:
            return self
        first = self.prices[0]
        order = sorted(range(len(self.tickers)), key=lambda j: (first[j], self.tickers[j]))
        return PriceTable(
            tuple(self.tickers[j] for j in order),
            self.dates,
            tuple(tuple(row[j] for j in order) for row in self.prices),
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["date", *self.tickers])
        for day, row in zip(self.dates, self.prices):
            writer.writerow([day.isoformat(), *(f"{p:.2f}" for p in row)])
        return buf.getvalue()


def parse_price_table(source: TextIO | str, tickers_filter: Sequence[str] | None = None) -> PriceTable:
    """Parse ``date,SYM1,SYM2,...`` CSV text into an arranged :class:`PriceTable`.

    ``source`` is a text stream or the CSV content itself.  Rows may come
    newest-first or oldest-first; they are always returned ascending.
    """
    text = source if isinstance(source, str) else source.read()
    reader = csv.reader(io.StringIO(text))
    lines = [row for row in reader if row and any(cell.strip() for cell in row)]
    if not lines:
        raise PriceTableError("empty CSV")
    header = [cell.strip() for cell in lines[0]]
    if len(header) < 2 or header[0].lower() != "date":
        raise PriceTableError("header must be 'date,<ticker>,...'")
    symbols = header[1:]
    if any(not s for s in symbols):
        raise PriceTableError("empty ticker symbol in header")
    if len(set(symbols)) != len(symbols):
        raise PriceTableError("duplicate ticker in header")

    if tickers_filter is not None:
        unknown = [s for s in tickers_filter if s not in symbols]
        if unknown:
            raise PriceTableError(f"unknown ticker(s) in filter: {', '.join(unknown)}")
        keep = [symbols.index(s) for s in tickers_filter]
        if len(set(keep)) != len(keep):
            raise PriceTableError("duplicate ticker in filter")
        keep.sort()
    else:
        keep = list(range(len(symbols)))
    if not keep:
        raise PriceTableError("no tickers selected")

    by_date: dict[date, tuple[Decimal, ...]] = {}
    for lineno, row in enumerate(lines[1:], start=2):
        if len(row) != len(header):
            raise PriceTableError(f"line {lineno}: expected {len(header)} fields, got {len(row)}")
        day = parse_date(row[0])
        if day in by_date:
            raise PriceTableError(f"duplicate date {day.isoformat()}")
        by_date[day] = tuple(
            _parse_price(row[j + 1], f"line {lineno}, {symbols[j]}") for j in keep
        )
    if not by_date:
        raise PriceTableError("CSV has a header but no price rows")

    dates = tuple(sorted(by_date))
    table = PriceTable(
        tuple(symbols[j] for j in keep),
        dates,
        tuple(by_date[d] for d in dates),
    )
    return table.arranged()


def read_price_table(path: str | Path, tickers_filter: Sequence[str] | None = None) -> PriceTable:
    with open(path, newline="", encoding="utf-8") as fh:
        return parse_price_table(fh, tickers_filter)


SAMPLE_DATASET = "djia_2013_4.csv"


def load_sample_prices(name: str = SAMPLE_DATASET,
                       tickers_filter: Sequence[str] | None = None) -> PriceTable:
    """A CSV bundled in ``knotmarket.data`` (AXP, HD, WMT, PG, May-June 2013)."""
    text = resources.files("knotmarket.data").joinpath(name).read_text(encoding="utf-8")
    return parse_price_table(text, tickers_filter)


RankSequence = tuple[tuple[int, ...], ...]
"""Per date, the column indices of the table ordered cheapest first."""


def rank_sequence(table: PriceTable) -> RankSequence:
    n = len(table.tickers)
    return tuple(
        tuple(sorted(range(n), key=lambda j, row=row: (row[j], table.tickers[j])))
        for row in table.prices
    )


def is_permutation(order: Iterable[int], n: int) -> bool:
    seq = list(order)
    return len(seq) == n and sorted(seq) == list(range(n))
