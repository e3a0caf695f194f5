"""
Braid words over Artin generators.

A letter ``+i`` is sigma_i (the strand at position i passes over its right
neighbour), ``-i`` is its inverse.  Positions are 1-based and the leftmost
letter is the earliest crossing in time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .crossings import CrossingEvent

__all__ = [
    "BraidWord",
    "BraidError",
    "TrendSummary",
    "word_from_crossings",
    "concatenate",
    "free_reduce",
    "cyclic_reduce",
    "writhe",
    "underlying_permutation",
    "permutation_cycles",
    "interpret_word",
]

_SUPERSCRIPTS = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")


class BraidError(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strand_count: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strand_count < 1:
            raise BraidError("a braid needs at least one strand")
        object.__setattr__(self, "letters", tuple(int(g) for g in self.letters))
        for g in self.letters:
            if g == 0 or abs(g) >= self.strand_count:
                raise BraidError(f"generator {g} out of range for {self.strand_count} strands")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concatenate(self, other)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strand_count, tuple(-g for g in reversed(self.letters)))

    def mirror(self) -> BraidWord:
        return BraidWord(self.strand_count, tuple(-g for g in self.letters))

    def is_identity_word(self) -> bool:
        return not self.letters

    def render(self) -> str:
        """``s2 s3 s3 s3' s1'``; the identity renders as ``e``."""
        if not self.letters:
            return "e"
        return " ".join(f"s{abs(g)}" + ("'" if g < 0 else "") for g in self.letters)

    def render_sigma(self) -> str:
        """``σ2·σ3²·σ3⁻¹·σ1⁻¹``: runs of one letter collapse to a power."""
        if not self.letters:
            return "e"
        runs: list[tuple[int, int]] = []
        for g in self.letters:
            if runs and runs[-1][0] == g:
                runs[-1] = (g, runs[-1][1] + 1)
            else:
                runs.append((g, 1))
        parts = []
        for g, k in runs:
            exp = k if g > 0 else -k
            tail = "" if exp == 1 else str(exp).translate(_SUPERSCRIPTS)
            parts.append(f"σ{abs(g)}{tail}")
        return "·".join(parts)

    def __str__(self) -> str:
        return self.render()

    def to_json(self) -> dict:
        return {"strand_count": self.strand_count, "letters": list(self.letters)}

    @classmethod
    def from_json(cls, data: dict) -> BraidWord:
        return cls(int(data["strand_count"]), tuple(data["letters"]))

    @classmethod
    def parse(cls, text: str, strand_count: int | None = None) -> BraidWord:
        """Parse ``"s1 s2' s1"`` (also ``s2^-1`` or bare signed integers).

        Without ``strand_count`` the smallest braid group holding every letter
        is used.
        """
        letters: list[int] = []
        for tok in re.split(r"[\s,]+", text.strip()):
            if not tok or tok == "e":
                continue
            m = re.fullmatch(r"(?:s|σ)(\d+)(?:(')|\^-1|\^\(-1\))?", tok)
            if m:
                g = int(m.group(1))
                letters.append(-g if (m.group(2) or "^" in tok) else g)
                continue
            if re.fullmatch(r"[+-]?\d+", tok):
                letters.append(int(tok))
                continue
            raise BraidError(f"cannot parse braid letter {tok!r}")
        if strand_count is None:
            strand_count = max((abs(g) for g in letters), default=0) + 1
        return cls(strand_count, tuple(letters))


def word_from_crossings(events: Sequence[CrossingEvent], strand_count: int) -> BraidWord:
    for ev in events:
        if not 1 <= ev.position < strand_count:
            raise BraidError(f"crossing position {ev.position} out of range for {strand_count} strands")
    return BraidWord(strand_count, tuple(ev.sign * ev.position for ev in events))


def concatenate(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strand_count != b.strand_count:
        raise BraidError(f"cannot concatenate braids on {a.strand_count} and {b.strand_count} strands")
    return BraidWord(a.strand_count, a.letters + b.letters)


def _free_reduce_letters(letters: Iterable[int]) -> list[int]:
    stack: list[int] = []
    for g in letters:
        if stack and stack[-1] == -g:
            stack.pop()
        else:
            stack.append(g)
    return stack


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent ``g, -g`` pairs until none remain."""
    return BraidWord(w.strand_count, tuple(_free_reduce_letters(w.letters)))


def cyclic_reduce(w: BraidWord) -> BraidWord:
    """Free reduction plus cancellation of inverse pairs across the closure seam."""
    letters = _free_reduce_letters(w.letters)
    lo, hi = 0, len(letters)
    while hi - lo >= 2 and letters[lo] == -letters[hi - 1]:
        lo += 1
        hi -= 1
    return BraidWord(w.strand_count, tuple(letters[lo:hi]))


def writhe(w: BraidWord) -> int:
    return sum(1 if g > 0 else -1 for g in w.letters)


def underlying_permutation(w: BraidWord) -> tuple[int, ...]:
    """``perm[p]`` is the 0-based end position of the strand starting at ``p``."""
    # arrangement[k] = strand currently at position k
    arrangement = list(range(w.strand_count))
    for g in w.letters:
        i = abs(g) - 1
        arrangement[i], arrangement[i + 1] = arrangement[i + 1], arrangement[i]
    perm = [0] * w.strand_count
    for pos, strand in enumerate(arrangement):
        perm[strand] = pos
    return tuple(perm)


def permutation_cycles(perm: Sequence[int]) -> list[tuple[int, ...]]:
    """Cycles ordered by their smallest element, each starting there."""
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cyc = []
        p = start
        while not seen[p]:
            seen[p] = True
            cyc.append(p)
            p = perm[p]
        cycles.append(tuple(cyc))
    return cycles


@dataclass(frozen=True)
class TrendSummary:
    ticker: str
    overcrossings: int  # sigma letters credited to this ticker
    undercrossings: int  # sigma-inverse letters credited to this ticker
    last_sign: int  # sign of the most recent credited letter, 0 if none

    @property
    def net(self) -> int:
        return self.overcrossings - self.undercrossings

    @property
    def trend(self) -> str:
        score = self.net or self.last_sign
        if score > 0:
            return "bullish"
        if score < 0:
            return "bearish"
        return "flat"

    def to_json(self) -> dict:
        return {
            "ticker": self.ticker,
            "overcrossings": self.overcrossings,
            "undercrossings": self.undercrossings,
            "net": self.net,
            "trend": self.trend,
        }


def interpret_word(w: BraidWord, labeling: Sequence[str]) -> dict[str, TrendSummary]:
    """Per-ticker trend reading of a braid word.

    Each letter is credited to the stock that passes over at that crossing:
    for sigma_i the stock at position i, which rises past its neighbour; for
    sigma_i^-1 the stock at position i+1, which falls past its neighbour.  A
    credited sigma counts as an overcrossing, a credited inverse as an
    undercrossing.  The trend follows the net count, falling back to the
    direction of the stock's latest crossing when the count nets to zero.
    """
    if len(labeling) != w.strand_count:
        raise BraidError(f"labeling has {len(labeling)} tickers for {w.strand_count} strands")
    overs = {t: 0 for t in labeling}
    unders = {t: 0 for t in labeling}
    last = {t: 0 for t in labeling}
    at = list(labeling)
    for g in w.letters:
        i = abs(g) - 1
        if g > 0:
            overs[at[i]] += 1
            last[at[i]] = 1
        else:
            unders[at[i + 1]] += 1
            last[at[i + 1]] = -1
        at[i], at[i + 1] = at[i + 1], at[i]
    return {t: TrendSummary(t, overs[t], unders[t], last[t]) for t in labeling}
