"""Regenerate src/knotmarket/data/knot_table.txt from braid representatives.

Every polynomial in the output is computed by knotmarket itself; the braid
words are the standard KnotInfo / LinkInfo representatives.

    python scripts/build_knot_table.py > src/knotmarket/data/knot_table.txt
"""

from __future__ import annotations

import sys

from knotmarket.braid import BraidWord
from knotmarket.classify import TABLE_VERSION, KnotTableEntry, format_entry
from knotmarket.invariants import alexander, jones
from knotmarket.link import close_braid

KNOTS = {
    "3_1": [1, 1, 1],
    "4_1": [1, -2, 1, -2],
    "5_1": [1, 1, 1, 1, 1],
    "5_2": [1, 1, 1, 2, -1, 2],
    "6_1": [1, 1, 2, -1, -3, 2, -3],
    "6_2": [1, 1, 1, -2, 1, -2],
    "6_3": [1, 1, -2, 1, -2, -2],
    "7_1": [1, 1, 1, 1, 1, 1, 1],
    "7_2": [1, 1, 1, 2, -1, 2, 3, -2, 3],
    "7_3": [1, 1, 1, 1, 1, 2, -1, 2],
    "7_4": [1, 1, 2, -1, 2, 2, 3, -2, 3],
    "7_5": [1, 1, 1, 1, 2, -1, 2, 2],
    "7_6": [1, 1, -2, 1, 3, -2, 3],
    "7_7": [-1, 2, -1, 2, -3, 2, -3],
    "8_1": [1, 1, 2, -1, 2, 3, -2, -4, 3, -4],
    "8_2": [1, 1, 1, 1, 1, -2, 1, -2],
    "8_3": [1, 1, 2, -1, -3, 2, -3, -4, 3, -4],
    "8_4": [-1, -1, -1, 2, -1, 2, 3, -2, 3],
    "8_5": [1, 1, 1, -2, 1, 1, 1, -2],
    "8_6": [1, 1, 1, 1, 2, -1, -3, 2, -3],
    "8_7": [-1, -1, -1, -1, 2, -1, 2, 2],
    "8_8": [-1, -1, -1, -2, 1, 3, -2, 3, 3],
    "8_9": [1, 1, 1, -2, 1, -2, -2, -2],
    "8_10": [-1, -1, -1, 2, -1, -1, 2, 2],
    "8_11": [1, 1, 2, -1, 2, 2, -3, 2, -3],
    "8_12": [1, -2, 1, 3, -2, -4, 3, -4],
    "8_13": [1, 1, -2, 1, -2, -2, -3, 2, -3],
    "8_14": [1, 1, 1, 2, -1, 2, -3, 2, -3],
    "8_15": [1, 1, -2, 1, 3, 2, 2, 2, 3],
    "8_16": [-1, -1, 2, -1, -1, 2, -1, 2],
    "8_17": [1, 1, -2, 1, -2, 1, -2, -2],
    "8_18": [1, -2, 1, -2, 1, -2, 1, -2],
    "8_19": [1, 1, 1, 2, 1, 1, 1, 2],
    "8_20": [1, 1, 1, -2, -1, -1, -1, -2],
    "8_21": [1, 1, 1, 2, -1, -1, 2, 2],
}

CHIRAL_NOTES = {"3_1": "right-handed trefoil"}
AMPHICHIRAL = {"4_1", "6_3", "8_3", "8_9", "8_12", "8_17", "8_18"}

# (name, strands, letters, crossing number, note)
LINKS = [
    ("0_1", 1, [], 0, "unknot"),
    ("0_1^2", 2, [], 0, "2-component unlink"),
    ("0_1^3", 3, [], 0, "3-component unlink"),
    ("0_1^4", 4, [], 0, "4-component unlink"),
    ("L2a1", 2, [1, 1], 2, "positive Hopf link"),
    ("L4a1", 2, [1, 1, 1, 1], 4, "positive Solomon link, parallel orientation"),
]

HEADER = f"""\
# {TABLE_VERSION}
# name|components|crossing_number|alexander|jones|note
# Polynomials are exponent-offset coefficient lists, lowest power of t first.
# Every value was computed by knotmarket from the standard braid representative
# of the entry; the stored Jones polynomial belongs to that representative and
# its mirror is matched as well.
# Alexander coefficients of 3_1..8_21 were spot-checked against a published
# table fragment (coefficients listed from the middle term outwards).  Rows
# whose printed coefficients cannot come from a symmetric polynomial with
# |Delta(1)| = 1 were skipped: 5_1, 6_2, 7_2, 7_3, 7_5, 8_2, 8_17.
"""


def entries() -> list[KnotTableEntry]:
    out = []
    for name, n, letters, crossings, note in LINKS:
        w = BraidWord(n, tuple(letters))
        d = close_braid(w)
        out.append(KnotTableEntry(name, crossings, d.component_count, alexander(w), jones(d), note))
    for name, letters in KNOTS.items():
        w = BraidWord(max(abs(g) for g in letters) + 1, tuple(letters))
        crossings = int(name.split("_")[0])
        note = "amphichiral" if name in AMPHICHIRAL else CHIRAL_NOTES.get(name, "")
        out.append(KnotTableEntry(name, crossings, 1, alexander(w), jones(close_braid(w)), note))
    return out


def main() -> None:
    sys.stdout.write(HEADER)
    for e in entries():
        sys.stdout.write(format_entry(e) + "\n")


if __name__ == "__main__":
    main()
