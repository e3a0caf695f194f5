import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import braid_words
from knotmarket.braid import (
    BraidError,
    BraidWord,
    concatenate,
    cyclic_reduce,
    free_reduce,
    interpret_word,
    permutation_cycles,
    underlying_permutation,
    writhe,
)


def test_render_and_parse():
    w = BraidWord(4, (2, 3, 3, -3, -1))
    assert w.render() == "s2 s3 s3 s3' s1'"
    assert w.render_sigma() == "σ2·σ3²·σ3⁻¹·σ1⁻¹"
    assert BraidWord.parse("s2 s3 s3 s3' s1'", 4) == w
    assert BraidWord.parse("σ2 σ3 s3 s3^-1 -1", 4) == w
    assert BraidWord(3, ()).render() == "e"
    assert BraidWord.parse("s1 s1").strand_count == 2


@pytest.mark.parametrize("text", ["x1", "s", "s1''"])
def test_parse_rejects_garbage(text):
    with pytest.raises(BraidError):
        BraidWord.parse(text)


def test_letter_range_is_checked():
    with pytest.raises(BraidError):
        BraidWord(3, (3,))
    with pytest.raises(BraidError):
        BraidWord(3, (0,))


@given(braid_words())
def test_parse_render_roundtrip(w):
    assert BraidWord.parse(w.render(), w.strand_count) == w
    assert BraidWord.from_json(w.to_json()) == w


@given(braid_words())
def test_inverse_cancels(w):
    assert free_reduce(w * w.inverse()).is_identity_word()
    assert writhe(w.inverse()) == -writhe(w)
    assert writhe(w.mirror()) == -writhe(w)


@given(braid_words(max_len=10))
def test_free_reduce_properties(w):
    r = free_reduce(w)
    assert all(a != -b for a, b in zip(r.letters, r.letters[1:]))
    assert free_reduce(r) == r
    assert writhe(r) == writhe(w)
    assert underlying_permutation(r) == underlying_permutation(w)


@given(braid_words(max_len=10))
def test_cyclic_reduce_properties(w):
    r = cyclic_reduce(w)
    assert cyclic_reduce(r) == r
    if len(r) >= 2:
        assert r.letters[0] != -r.letters[-1]
    assert len(permutation_cycles(underlying_permutation(r))) == \
        len(permutation_cycles(underlying_permutation(w)))


def test_concatenate_needs_same_group():
    with pytest.raises(BraidError):
        concatenate(BraidWord(2, (1,)), BraidWord(3, (2,)))


def test_permutation_of_generator():
    assert underlying_permutation(BraidWord(3, (1,))) == (1, 0, 2)
    assert permutation_cycles((1, 2, 0, 3)) == [(0, 1, 2), (3,)]


def test_trend_reading_of_opening_crossings():
    w = BraidWord(4, (2, 3, 3, -3, -1))
    trends = {t: s.trend for t, s in interpret_word(w, ["AXP", "HD", "WMT", "PG"]).items()}
    assert trends == {"AXP": "flat", "HD": "bullish", "WMT": "bearish", "PG": "bearish"}


@given(braid_words())
def test_every_letter_is_credited_once(w):
    labels = [f"T{k}" for k in range(w.strand_count)]
    summary = interpret_word(w, labels)
    assert sum(s.overcrossings for s in summary.values()) == sum(1 for g in w.letters if g > 0)
    assert sum(s.undercrossings for s in summary.values()) == sum(1 for g in w.letters if g < 0)


def test_labeling_length_checked():
    with pytest.raises(BraidError):
        interpret_word(BraidWord(3, (1,)), ["A", "B"])
