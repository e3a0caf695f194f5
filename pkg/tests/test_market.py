from datetime import date
from decimal import Decimal

import pytest
from hypothesis import given
from hypothesis import strategies as st

from knotmarket.market import (
    PriceTableError,
    is_permutation,
    load_sample_prices,
    parse_date,
    parse_price_table,
    rank_sequence,
)


def test_parse_orders_columns_by_first_day(sample_csv):
    t = parse_price_table(sample_csv)
    assert t.tickers == ("AAA", "BBB", "CCC")
    assert t.dates[0] == date(2020, 1, 2)
    assert t.price("BBB", date(2020, 1, 3)) == Decimal("19.00")


def test_newest_first_rows_are_sorted():
    text = "date,X,Y\n1/3/2020,2.00,1.00\n1/2/2020,1.00,2.00\n"
    t = parse_price_table(text)
    assert t.dates == (date(2020, 1, 2), date(2020, 1, 3))
    assert t.tickers == ("X", "Y")


def test_arrangement_ties_break_by_symbol():
    t = parse_price_table("date,ZZ,AA\n2020-01-02,5.00,5.00\n")
    assert t.tickers == ("AA", "ZZ")


def test_ticker_filter(sample_csv):
    t = parse_price_table(sample_csv, ["CCC", "AAA"])
    assert t.tickers == ("AAA", "CCC")
    with pytest.raises(PriceTableError):
        parse_price_table(sample_csv, ["QQQ"])


@pytest.mark.parametrize("text", [
    "",
    "day,A\n2020-01-02,1.00\n",
    "date,A,A\n2020-01-02,1.00,2.00\n",
    "date,A\n",
    "date,A\n2020-01-02,1.00\n2020-01-02,1.10\n",
    "date,A\n2020-01-02,-1.00\n",
    "date,A\n2020-01-02,0\n",
    "date,A\n2020-01-02,abc\n",
    "date,A\n2020-01-02,NaN\n",
    "date,A\n2020-01-02,1.005\n",
    "date,A,B\n2020-01-02,1.00\n",
    "date,A\n2020-13-45,1.00\n",
])
def test_malformed_input_is_rejected(text):
    with pytest.raises(PriceTableError):
        parse_price_table(text)


def test_parse_date_formats():
    assert parse_date("2013-05-20") == parse_date("5/20/2013") == date(2013, 5, 20)


def test_between_rearranges_for_window_start():
    t = load_sample_prices()
    w = t.between(date(2013, 5, 22), date(2013, 5, 24))
    assert len(w) == 3
    assert w.tickers == ("AXP", "WMT", "PG", "HD")


def test_between_rejects_empty_window():
    with pytest.raises(PriceTableError):
        load_sample_prices().between(date(2000, 1, 1), date(2000, 2, 1))


def test_csv_roundtrip():
    t = load_sample_prices()
    assert parse_price_table(t.to_csv()) == t


prices = st.decimals(min_value=Decimal("0.01"), max_value=Decimal("999.99"), places=2)


@given(st.lists(st.lists(prices, min_size=3, max_size=3), min_size=1, max_size=8))
def test_rank_sequence_rows_are_permutations(rows):
    body = "".join(f"2020-01-{k + 1:02d},{','.join(str(p) for p in r)}\n" for k, r in enumerate(rows))
    t = parse_price_table("date,A,B,C\n" + body)
    ranks = rank_sequence(t)
    assert len(ranks) == len(t.dates)
    for row, order in zip(t.prices, ranks):
        assert is_permutation(order, 3)
        assert [row[j] for j in order] == sorted(row)
    assert ranks[0] == (0, 1, 2)
