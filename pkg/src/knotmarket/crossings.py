"""Adjacent-pair crossings between consecutive trading days.

A crossing happens when two neighbours in the price-sorted arrangement swap
places from one close to the next.  The stock whose price moved more across
the boundary passes over the other one.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from datetime import date
from decimal import Decimal
from typing import Sequence

from .market import PriceTable, RankSequence, rank_sequence

__all__ = [
    "OVER",
    "UNDER",
    "CrossingEvent",
    "CrossingTieWarning",
    "bubble_decomposition",
    "classify_crossing",
    "crossing_deltas",
    "detect_crossings",
]

OVER = 1
UNDER = -1


class CrossingTieWarning(UserWarning):
    """Both stocks moved by exactly the same amount; classified as under."""


@dataclass(frozen=True)
class CrossingEvent:
    date_from: date
    date_to: date
    position: int  # 1-based; the swap occupies positions (position, position + 1)
    left_ticker: str
    right_ticker: str
    delta_left: Decimal
    delta_right: Decimal
    sign: int

    @property
    def is_tie(self) -> bool:
        return self.delta_left == self.delta_right

    @property
    def is_over(self) -> bool:
        return self.sign == OVER

    def to_json(self) -> dict:
        return {
            "date_from": self.date_from.isoformat(),
            "date_to": self.date_to.isoformat(),
            "position": self.position,
            "left": self.left_ticker,
            "right": self.right_ticker,
            "delta_left": f"{self.delta_left:.2f}",
            "delta_right": f"{self.delta_right:.2f}",
            "sign": self.sign,
        }

    @classmethod
    def from_json(cls, data: dict) -> CrossingEvent:
        return cls(
            date.fromisoformat(data["date_from"]),
            date.fromisoformat(data["date_to"]),
            int(data["position"]),
            data["left"],
            data["right"],
            Decimal(data["delta_left"]),
            Decimal(data["delta_right"]),
            int(data["sign"]),
        )


def crossing_deltas(table: PriceTable, left: str, right: str,
                    date_from: date, date_to: date) -> tuple[Decimal, Decimal]:
    """Absolute close-to-close price moves of both stocks."""
    d_left = abs(table.price(left, date_from) - table.price(left, date_to))
    d_right = abs(table.price(right, date_from) - table.price(right, date_to))
    return d_left, d_right


def _sign_from_deltas(d_left: Decimal, d_right: Decimal, left: str, right: str,
                      date_from: date, date_to: date) -> int:
    if d_left > d_right:
        return OVER
    if d_left == d_right:
        warnings.warn(
            f"equal moves ({d_left}) for {left} and {right} between "
            f"{date_from.isoformat()} and {date_to.isoformat()}; classified as under",
            CrossingTieWarning,
            stacklevel=3,
        )
    return UNDER


def classify_crossing(table: PriceTable, left: str, right: str,
                      date_from: date, date_to: date) -> int:
    """+1 if the left stock moved more (overcrossing), else -1.

    Ties are resolved as undercrossings and raise :class:`CrossingTieWarning`.
    """
    d_left, d_right = crossing_deltas(table, left, right, date_from, date_to)
    return _sign_from_deltas(d_left, d_right, left, right, date_from, date_to)


def bubble_decomposition(before: Sequence, after: Sequence) -> list[int]:
    """0-based adjacent-swap positions turning ``before`` into ``after``.

    Repeated left-to-right bubble passes; the swap count equals the number of
    inversions between the two orders, which is the minimum possible.
    """
    if len(before) != len(after) or set(before) != set(after) or len(set(after)) != len(after):
        raise ValueError("orders must be permutations of the same distinct items")
    target = {item: k for k, item in enumerate(after)}
    cur = list(before)
    swaps: list[int] = []
    changed = True
    while changed:
        changed = False
        for k in range(len(cur) - 1):
            if target[cur[k]] > target[cur[k + 1]]:
                cur[k], cur[k + 1] = cur[k + 1], cur[k]
                swaps.append(k)
                changed = True
    return swaps


def detect_crossings(table: PriceTable, ranks: RankSequence | None = None) -> list[CrossingEvent]:
    """All crossings in time order, each boundary decomposed by bubble sort."""
    if ranks is None:
        ranks = rank_sequence(table)
    if len(ranks) != len(table.dates):
        raise ValueError("rank sequence does not match the table")
    events: list[CrossingEvent] = []
    for k in range(len(ranks) - 1):
        d0, d1 = table.dates[k], table.dates[k + 1]
        cur = list(ranks[k])
        for pos in bubble_decomposition(ranks[k], ranks[k + 1]):
            left = table.tickers[cur[pos]]
            right = table.tickers[cur[pos + 1]]
            d_left, d_right = crossing_deltas(table, left, right, d0, d1)
            sign = _sign_from_deltas(d_left, d_right, left, right, d0, d1)
            events.append(CrossingEvent(d0, d1, pos + 1, left, right, d_left, d_right, sign))
            cur[pos], cur[pos + 1] = cur[pos + 1], cur[pos]
    return events
