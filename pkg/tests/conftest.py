from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from knotmarket.braid import BraidWord


def braid_words(min_strands: int = 2, max_strands: int = 4, max_len: int = 6):
    def letters(n: int):
        gen = st.integers(1, n - 1).flatmap(lambda g: st.sampled_from([g, -g]))
        return st.lists(gen, max_size=max_len).map(lambda ls: BraidWord(n, tuple(ls)))

    return st.integers(min_strands, max_strands).flatmap(letters)


def random_word(rng: random.Random, max_strands: int = 4, max_len: int = 6,
                min_strands: int = 2) -> BraidWord:
    n = rng.randint(min_strands, max_strands)
    k = rng.randint(0, max_len)
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(k)))


CRITERIA_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if CRITERIA_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERIA_LINES):
            terminalreporter.write_line(line)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20130607)


SAMPLE_CSV = """\
date,AAA,BBB,CCC
2020-01-02,10.00,20.00,30.00
2020-01-03,10.50,19.00,30.10
2020-01-06,21.00,18.00,29.00
"""


@pytest.fixture
def sample_csv() -> str:
    return SAMPLE_CSV
