from __future__ import annotations

from datetime import date, timedelta

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import write_csv
from scnet.errors import ConfigError, CorpusError, RowError
from scnet.ingestion import (
    ColumnMapping,
    DateRange,
    DocumentRecord,
    filter_by_date,
    load_documents,
    parse_date,
    split_range,
)

HEADER = ("id", "date", "agency", "sow")
HARVEY = DateRange(date(2017, 8, 26), date(2017, 9, 4))


def rec(doc_id: str, day: date, text: str = "") -> DocumentRecord:
    return DocumentRecord(doc_id, day, None, text)


def test_empty_file_gives_no_records(tmp_path):
    path = write_csv(tmp_path / "docs.csv", HEADER, [])
    assert load_documents(path) == []


def test_three_rows_mapped_in_file_order(tmp_path):
    path = write_csv(
        tmp_path / "docs.csv",
        HEADER,
        [
            ("MA-1", "2017-08-26", "DOE", "FEMA tasks DOE, see annex (A)."),
            ("MA-2", "2017-08-27", "", 'Quoted "text", with commas'),
            ("MA-3", "2017-08-28T13:45:00", "USACE", "line one\nline two"),
        ],
    )
    records = load_documents(path)
    assert [r.doc_id for r in records] == ["MA-1", "MA-2", "MA-3"]
    assert records[0] == DocumentRecord("MA-1", date(2017, 8, 26), "DOE", "FEMA tasks DOE, see annex (A).")
    assert records[1].assigned_agency is None
    assert records[1].text == 'Quoted "text", with commas'
    assert records[2].date == date(2017, 8, 28)
    assert records[2].text == "line one\nline two"


def test_landfall_date_parses(tmp_path):
    path = write_csv(tmp_path / "docs.csv", HEADER, [("MA-1", "2017-08-26", "FEMA", "x")])
    assert load_documents(path)[0].date == date(2017, 8, 26)


def test_custom_mapping_format_and_delimiter(tmp_path):
    path = tmp_path / "docs.tsv"
    path.write_text("mission\tissued\tto\tstatement\nX9\t08/30/2017\tDOD\tairlift\n", encoding="utf-8")
    mapping = ColumnMapping("mission", "issued", "to", "statement", "%m/%d/%Y")
    (r,) = load_documents(path, mapping, delimiter="\t")
    assert (r.doc_id, r.date, r.assigned_agency, r.text) == ("X9", date(2017, 8, 30), "DOD", "airlift")


def test_missing_column_names_it(tmp_path):
    path = write_csv(tmp_path / "docs.csv", ("id", "date", "agency"), [])
    with pytest.raises(ConfigError, match="'sow'"):
        load_documents(path)


def test_bad_date_reports_row_number(tmp_path):
    path = write_csv(
        tmp_path / "docs.csv", HEADER, [("a", "2017-08-26", "", ""), ("b", "26 Aug", "", "")]
    )
    with pytest.raises(RowError) as err:
        load_documents(path)
    assert err.value.row == 3
    assert "26 Aug" in str(err.value)


def test_lenient_mode_skips_bad_dates(tmp_path, caplog):
    path = write_csv(
        tmp_path / "docs.csv", HEADER, [("a", "2017-08-26", "", ""), ("b", "nope", "", ""), ("c", "2017-09-01", "", "")]
    )
    records = load_documents(path, strict=False)
    assert [r.doc_id for r in records] == ["a", "c"]
    assert "skipped 1 row" in caplog.text


def test_duplicate_doc_id_is_corpus_error(tmp_path):
    path = write_csv(tmp_path / "docs.csv", HEADER, [("a", "2017-08-26", "", ""), ("a", "2017-08-27", "", "")])
    with pytest.raises(CorpusError, match="'a'"):
        load_documents(path)


def test_empty_doc_id_rejected(tmp_path):
    path = write_csv(tmp_path / "docs.csv", HEADER, [("  ", "2017-08-26", "", "")])
    with pytest.raises(RowError):
        load_documents(path)


def test_load_is_deterministic(tmp_path):
    path = write_csv(tmp_path / "docs.csv", HEADER, [(f"d{i}", "2017-08-26", "", f"t{i}") for i in range(20)])
    assert load_documents(path) == load_documents(path)


@pytest.mark.parametrize(
    "cols",
    [("id", "id", "agency", "sow"), ("id", "", "agency", "sow"), ("id", "date", " ", "sow")],
)
def test_column_mapping_invariants(cols):
    with pytest.raises(ConfigError):
        ColumnMapping(*cols)


@pytest.mark.parametrize(
    "value,expected",
    [
        ("2017-08-26", date(2017, 8, 26)),
        ("2017-08-26T23:59:59", date(2017, 8, 26)),
        ("2017-08-26T00:00:00.000Z", date(2017, 8, 26)),
        (" 2017-09-04 ", date(2017, 9, 4)),
    ],
)
def test_parse_iso_dates(value, expected):
    assert parse_date(value) == expected


def test_date_range_rejects_inverted():
    with pytest.raises(ConfigError):
        DateRange(date(2017, 9, 4), date(2017, 8, 26))


def test_filter_boundaries_inclusive():
    records = [rec(d, day) for d, day in [("a", date(2017, 8, 25)), ("b", date(2017, 8, 26)),
                                          ("c", date(2017, 9, 4)), ("d", date(2017, 9, 5))]]
    assert [r.doc_id for r in filter_by_date(records, HARVEY)] == ["b", "c"]


def test_filter_empty():
    assert filter_by_date([], HARVEY) == []


def test_filter_ten_records_hand_counted():
    days = [20, 23, 25, 26, 28, 31, 33, 35, 36, 41]  # day of August, 32 = Sep 1
    records = [rec(f"r{i}", date(2017, 8, 1) + timedelta(days=d - 1)) for i, d in enumerate(days)]
    # Aug 26 .. Sep 4 is day 26 .. 35 -> r3, r4, r5, r6, r7
    kept = filter_by_date(records, HARVEY)
    assert [r.doc_id for r in kept] == ["r3", "r4", "r5", "r6", "r7"]


def test_filter_does_not_modify_input():
    records = [rec("a", date(2017, 8, 1)), rec("b", date(2017, 8, 30))]
    snapshot = list(records)
    filter_by_date(records, HARVEY)
    assert records == snapshot


day_offsets = st.lists(st.integers(min_value=-30, max_value=40), max_size=30)


@given(day_offsets, st.integers(0, 20), st.integers(0, 20))
def test_filter_properties(offsets, a, b):
    base = date(2017, 8, 20)
    records = [rec(f"r{i}", base + timedelta(days=o)) for i, o in enumerate(offsets)]
    window = DateRange(base + timedelta(days=min(a, b)), base + timedelta(days=max(a, b)))
    once = filter_by_date(records, window)
    assert filter_by_date(once, window) == once
    assert len(once) <= len(records)
    assert all(window.start <= r.date <= window.end for r in once)
    # order preserved: kept records appear as a subsequence of the input
    idx = [records.index(r) for r in once]
    assert idx == sorted(idx)


def test_split_range_ten_days_into_two():
    parts = split_range(HARVEY, 5)
    assert parts == [DateRange(date(2017, 8, 26), date(2017, 8, 30)), DateRange(date(2017, 8, 31), date(2017, 9, 4))]


def test_split_range_uneven_and_oversized():
    assert [p.days for p in split_range(HARVEY, 3)] == [3, 3, 3, 1]
    assert split_range(HARVEY, 30) == [HARVEY]
