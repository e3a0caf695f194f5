"""Closed braids as planar diagrams (PD codes)."""

from __future__ import annotations

from dataclasses import dataclass, field

from .braid import BraidWord, permutation_cycles, underlying_permutation

__all__ = ["PDCrossing", "LinkDiagram", "close_braid", "component_count", "trace_components"]


@dataclass(frozen=True)
class PDCrossing:
    """One crossing as ``X[i, j, k, l]``.

    Arcs are listed counterclockwise starting from the incoming under-arc, so
    the under-strand runs ``i -> k``.  The over-strand runs ``l -> j`` on a
    positive crossing and ``j -> l`` on a negative one.
    """

    sign: int
    arcs: tuple[int, int, int, int]

    def over_path(self) -> tuple[int, int]:
        i, j, k, l = self.arcs
        return (l, j) if self.sign > 0 else (j, l)

    def under_path(self) -> tuple[int, int]:
        return self.arcs[0], self.arcs[2]

    def render(self) -> str:
        return "X[" + ",".join(str(a) for a in self.arcs) + "]"


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[PDCrossing, ...]
    arc_count: int
    component_count: int
    free_loops: int = 0  # components that meet no crossing at all
    source_word: BraidWord | None = field(default=None, compare=False)

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def pd_code(self) -> str:
        """``PD[X[..], ...]``; crossing-free components are not representable and omitted."""
        return "PD[" + ", ".join(c.render() for c in self.crossings) + "]"

    def to_json(self) -> dict:
        return {
            "pd": [list(c.arcs) for c in self.crossings],
            "signs": [c.sign for c in self.crossings],
            "arc_count": self.arc_count,
            "component_count": self.component_count,
            "free_loops": self.free_loops,
        }


def close_braid(w: BraidWord) -> LinkDiagram:
    """Trace closure of ``w``: each strand's end is joined to the start at the same position.

    Strands are oriented along the braid (time order), drawn bottom to top, so
    sigma_i is a positive crossing and every crossing sign equals its letter's
    sign.  Arcs are the strand segments between consecutive crossings.
    """
    n = w.strand_count
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent.get(x, x) != x:
            x = parent[x]
        return x

    fresh = n
    start = list(range(n))
    cur = list(range(n))
    raw: list[tuple[int, tuple[int, int, int, int]]] = []
    for g in w.letters:
        i = abs(g) - 1
        a, b = cur[i], cur[i + 1]  # incoming left, incoming right
        c, d = fresh, fresh + 1  # outgoing left, outgoing right
        fresh += 2
        # left strand a -> d, right strand b -> c
        arcs = (b, d, c, a) if g > 0 else (a, b, d, c)
        raw.append((1 if g > 0 else -1, arcs))
        cur[i], cur[i + 1] = c, d
    touched = {abs(g) - 1 for g in w.letters} | {abs(g) for g in w.letters}
    for p in range(n):
        if cur[p] != start[p]:
            parent[find(cur[p])] = find(start[p])

    labels: dict[int, int] = {}
    crossings = []
    for sign, arcs in raw:
        named = []
        for a in arcs:
            root = find(a)
            if root not in labels:
                labels[root] = len(labels) + 1
            named.append(labels[root])
        crossings.append(PDCrossing(sign, tuple(named)))

    cycles = permutation_cycles(underlying_permutation(w))
    free = sum(1 for cyc in cycles if len(cyc) == 1 and cyc[0] not in touched)
    return LinkDiagram(tuple(crossings), len(labels), len(cycles), free, w)


def trace_components(d: LinkDiagram) -> list[list[int]]:
    """Arc cycles obtained by walking the oriented strands through the crossings."""
    succ: dict[int, int] = {}
    for c in d.crossings:
        for src, dst in (c.under_path(), c.over_path()):
            if src in succ:
                raise ValueError(f"arc {src} leaves two crossings")
            succ[src] = dst
    seen: set[int] = set()
    loops = []
    for start in sorted(succ):
        if start in seen:
            continue
        loop = []
        a = start
        while a not in seen:
            seen.add(a)
            loop.append(a)
            a = succ[a]
        loops.append(loop)
    return loops


def component_count(d: LinkDiagram) -> int:
    """Closed loops found by tracing arcs, plus crossing-free loops."""
    return len(trace_components(d)) + d.free_loops
