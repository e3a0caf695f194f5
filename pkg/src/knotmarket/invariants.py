"""
Kauffman bracket, Jones, Conway and Alexander polynomials of closed braids.

Polynomials in A are stored in quarter powers of t through A = t^(-1/4), so a
bracket value can be normalised into the Jones polynomial without any change
of representation.  Conway polynomials use the same container read in z.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Callable

from .braid import BraidWord, permutation_cycles, underlying_permutation
from .link import LinkDiagram, close_braid
from .polynomial import ONE, ZERO, LaurentPoly, alexander_normalize, conway_to_alexander

__all__ = [
    "DEFAULT_MAX_CROSSINGS",
    "DEFAULT_SKEIN_BUDGET",
    "CrossingLimitExceeded",
    "SkeinBudgetExceeded",
    "SkeinTriple",
    "A_POWER",
    "LOOP",
    "max_crossings_from_env",
    "kauffman_bracket",
    "bracket_state_sum",
    "jones",
    "jones_from_bracket",
    "jones_skein",
    "conway",
    "alexander",
    "skein_decompose",
    "first_bad_crossing",
    "render_in_A",
]

DEFAULT_MAX_CROSSINGS = 24
DEFAULT_SKEIN_BUDGET = 2 ** 20
ENV_MAX_CROSSINGS = "KNOTMARKET_MAX_CROSSINGS"


class CrossingLimitExceeded(RuntimeError):
    """The diagram has more crossings than the configured state-sum budget."""

    def __init__(self, crossings: int, limit: int):
        super().__init__(f"{crossings} crossings exceed the state-sum limit of {limit}")
        self.crossings = crossings
        self.limit = limit


class SkeinBudgetExceeded(RuntimeError):
    """The skein recursion expanded more nodes than allowed."""


def A_POWER(k: int) -> LaurentPoly:
    """A^k with A = t^(-1/4)."""
    return LaurentPoly.monomial(1, -k)


# loop value d = -A^2 - A^-2
LOOP = LaurentPoly({-2: -1, 2: -1})
_T_SQRT_DIFF = LaurentPoly({2: 1, -2: -1})  # t^(1/2) - t^(-1/2)
_Z = LaurentPoly.monomial(1, 4)
_UNLINK_JONES = LaurentPoly({2: -1, -2: -1})  # -(t^(1/2) + t^(-1/2))


def max_crossings_from_env(default: int = DEFAULT_MAX_CROSSINGS) -> int:
    raw = os.environ.get(ENV_MAX_CROSSINGS)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{ENV_MAX_CROSSINGS} must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError(f"{ENV_MAX_CROSSINGS} must be non-negative")
    return value


def _check_limit(d: LinkDiagram, max_crossings: int | None) -> None:
    limit = max_crossings_from_env() if max_crossings is None else max_crossings
    if d.crossing_count > limit:
        raise CrossingLimitExceeded(d.crossing_count, limit)


def _smoothings(arcs: tuple[int, int, int, int]):
    """(A-smoothing pairs, B-smoothing pairs) for X[i, j, k, l]."""
    i, j, k, l = arcs
    return ((i, j), (k, l)), ((i, l), (j, k))


# -- Kauffman bracket -------------------------------------------------------


def kauffman_bracket(d: LinkDiagram, max_crossings: int | None = None) -> LaurentPoly:
    """Sum over all 2^c smoothings of A^(a-b) * d^(loops-1).

    States are accumulated crossing by crossing and merged whenever they
    leave the same open strand ends, so the work grows with the number of
    distinct partial connectivities rather than with 2^c.  The result is the
    same exact sum as :func:`bracket_state_sum`.
    """
    _check_limit(d, max_crossings)
    if not d.crossings:
        return LOOP ** (d.component_count - 1)

    # key: (sorted open-end pairs, whether a loop already closed)
    states: dict[tuple[frozenset, bool], LaurentPoly] = {(frozenset(), False): ONE}
    for crossing in d.crossings:
        a_pairs, b_pairs = _smoothings(crossing.arcs)
        nxt: dict[tuple[frozenset, bool], LaurentPoly] = {}
        for (ends_key, closed), poly in states.items():
            for pairs, weight in ((a_pairs, A_POWER(1)), (b_pairs, A_POWER(-1))):
                ends = dict(ends_key)
                new_loops = 0
                for x, y in pairs:
                    new_loops += _join(ends, x, y)
                value = poly * weight
                has_closed = closed
                for _ in range(new_loops):
                    if has_closed:
                        value = value * LOOP
                    has_closed = True
                key = (frozenset(ends.items()), has_closed)
                nxt[key] = nxt.get(key, ZERO) + value
        states = {k: v for k, v in nxt.items() if v}
    total = ZERO
    for (ends_key, closed), poly in states.items():
        if ends_key:
            raise ValueError("diagram has dangling arcs")
        total = total + poly
    return total * LOOP ** d.free_loops


def _join(ends: dict[int, int], x: int, y: int) -> int:
    """Add the path segment x--y; return 1 if that closes a loop."""
    if x == y:
        return 1
    if x in ends and y in ends:
        if ends[x] == y:
            del ends[x], ends[y]
            return 1
        ox, oy = ends.pop(x), ends.pop(y)
        ends[ox], ends[oy] = oy, ox
        return 0
    if x in ends:
        ox = ends.pop(x)
        ends[ox], ends[y] = y, ox
        return 0
    if y in ends:
        oy = ends.pop(y)
        ends[oy], ends[x] = x, oy
        return 0
    ends[x], ends[y] = y, x
    return 0


def bracket_state_sum(d: LinkDiagram, max_crossings: int | None = 16) -> LaurentPoly:
    """Literal enumeration of every state with a fresh loop count per state.

    Exponential; kept as an independent check of :func:`kauffman_bracket`.
    """
    _check_limit(d, max_crossings)
    if not d.crossings:
        return LOOP ** (d.component_count - 1)
    arcs = sorted({a for c in d.crossings for a in c.arcs})
    index = {a: n for n, a in enumerate(arcs)}
    smooth = [_smoothings(c.arcs) for c in d.crossings]
    total = ZERO
    for choice in itertools.product((0, 1), repeat=len(smooth)):
        parent = list(range(len(arcs)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for pick, pair_sets in zip(choice, smooth):
            for x, y in pair_sets[pick]:
                rx, ry = find(index[x]), find(index[y])
                if rx != ry:
                    parent[rx] = ry
        loops = len({find(v) for v in range(len(arcs))}) + d.free_loops
        a_count = choice.count(0)
        b_count = len(choice) - a_count
        total = total + A_POWER(a_count - b_count) * LOOP ** (loops - 1)
    return total


def render_in_A(p: LaurentPoly) -> str:
    """Render a bracket value in the variable A."""
    return p.mirror().scale_exponents(4).render("A")


# -- Jones ------------------------------------------------------------------


def jones_from_bracket(bracket: LaurentPoly, writhe: int) -> LaurentPoly:
    """(-A)^(-3w) <D> with A = t^(-1/4)."""
    sign = -1 if writhe % 2 else 1
    v = bracket.shift(3 * writhe) * sign
    odd = [q for q, _ in v.items() if q % 2]
    if odd:
        raise AssertionError(f"quarter powers survived Jones normalisation: {v}")
    return v


def jones(d: LinkDiagram, max_crossings: int | None = None) -> LaurentPoly:
    return jones_from_bracket(kauffman_bracket(d, max_crossings), d.writhe)


# -- skein recursion on braid words -------------------------------------------


def first_bad_crossing(w: BraidWord) -> int | None:
    """Index of the first crossing met on its under-strand first, or None.

    Components are walked in order of their smallest starting position, each
    from the bottom of the braid at that position.  None means the closure is
    descending and therefore a split unlink.
    """
    seen = [False] * len(w.letters)
    for cycle in permutation_cycles(underlying_permutation(w)):
        pos = cycle[0]
        while True:
            for k, g in enumerate(w.letters):
                i = abs(g) - 1
                if pos == i:
                    over = g > 0
                    pos = i + 1
                elif pos == i + 1:
                    over = g < 0
                    pos = i
                else:
                    continue
                if not seen[k]:
                    seen[k] = True
                    if not over:
                        return k
            if pos == cycle[0]:
                break
    return None


def _switch(w: BraidWord, k: int) -> BraidWord:
    letters = list(w.letters)
    letters[k] = -letters[k]
    return BraidWord(w.strand_count, tuple(letters))


def _smooth(w: BraidWord, k: int) -> BraidWord:
    return BraidWord(w.strand_count, w.letters[:k] + w.letters[k + 1:])


class _SkeinEngine:
    """Memoised skein recursion with descending-diagram base cases."""

    def __init__(self, base: Callable[[int], LaurentPoly],
                 step: Callable[[int, LaurentPoly, LaurentPoly], LaurentPoly],
                 budget: int):
        self.base = base
        self.step = step
        self.budget = budget
        self.expanded = 0
        self.memo: dict[tuple[int, tuple[int, ...]], LaurentPoly] = {}

    def __call__(self, w: BraidWord) -> LaurentPoly:
        key = (w.strand_count, w.letters)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self.expanded += 1
        if self.expanded > self.budget:
            raise SkeinBudgetExceeded(f"skein recursion exceeded {self.budget} node expansions")
        k = first_bad_crossing(w)
        if k is None:
            comps = len(permutation_cycles(underlying_permutation(w)))
            value = self.base(comps)
        else:
            sign = 1 if w.letters[k] > 0 else -1
            value = self.step(sign, self(_switch(w, k)), self(_smooth(w, k)))
        self.memo[key] = value
        return value


def _conway_step(sign: int, switched: LaurentPoly, smoothed: LaurentPoly) -> LaurentPoly:
    # L+ = L- + z L0   and   L- = L+ - z L0
    return switched + sign * (_Z * smoothed)


def _jones_step(sign: int, switched: LaurentPoly, smoothed: LaurentPoly) -> LaurentPoly:
    if sign > 0:
        # V(L+) = t^2 V(L-) + t (t^(1/2) - t^(-1/2)) V(L0)
        return switched.shift(8) + (_T_SQRT_DIFF * smoothed).shift(4)
    # V(L-) = t^-2 V(L+) - t^-1 (t^(1/2) - t^(-1/2)) V(L0), solved from
    # t^-1 V(L+) - t V(L-) = (t^(1/2) - t^(-1/2)) V(L0)
    return switched.shift(-8) - (_T_SQRT_DIFF * smoothed).shift(-4)


def _word_of(d: LinkDiagram | BraidWord) -> BraidWord:
    if isinstance(d, BraidWord):
        return d
    if d.source_word is None:
        raise ValueError("skein recursion needs a diagram built from a braid word")
    return d.source_word


def conway(d: LinkDiagram | BraidWord, budget: int = DEFAULT_SKEIN_BUDGET) -> LaurentPoly:
    """Conway polynomial (in z) by skein recursion down to descending unlinks."""
    engine = _SkeinEngine(lambda comps: ONE if comps == 1 else ZERO, _conway_step, budget)
    return engine(_word_of(d))


def jones_skein(d: LinkDiagram | BraidWord, budget: int = DEFAULT_SKEIN_BUDGET) -> LaurentPoly:
    """Jones polynomial by skein recursion; independent of the bracket."""
    engine = _SkeinEngine(lambda comps: _UNLINK_JONES ** (comps - 1), _jones_step, budget)
    return engine(_word_of(d))


def alexander(d: LinkDiagram | BraidWord, budget: int = DEFAULT_SKEIN_BUDGET) -> LaurentPoly:
    """Normalised Alexander polynomial; zero for split links."""
    delta = conway_to_alexander(conway(d, budget))
    return delta if delta.is_zero() else alexander_normalize(delta)


# -- skein triples ----------------------------------------------------------------


@dataclass(frozen=True)
class SkeinTriple:
    plus: LinkDiagram
    minus: LinkDiagram
    zero: LinkDiagram


def skein_decompose(d: LinkDiagram | BraidWord, crossing_index: int) -> SkeinTriple:
    """L+, L-, L0 at one crossing (letter) of a closed braid."""
    w = _word_of(d)
    if not 0 <= crossing_index < len(w.letters):
        raise IndexError(f"crossing index {crossing_index} out of range for {len(w.letters)} crossings")
    g = abs(w.letters[crossing_index])
    plus = list(w.letters)
    minus = list(w.letters)
    plus[crossing_index] = g
    minus[crossing_index] = -g
    n = w.strand_count
    return SkeinTriple(
        close_braid(BraidWord(n, tuple(plus))),
        close_braid(BraidWord(n, tuple(minus))),
        close_braid(_smooth(w, crossing_index)),
    )
