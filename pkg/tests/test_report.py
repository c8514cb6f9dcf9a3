import math

from fuzzmark.report import ReportDocument, as_rational, number_entry, round12


def test_round12():
    assert round12(1 / 6) == 0.166666666667
    assert round12(0.0) == 0.0
    assert round12(13 / 6) == 2.16666666667


def test_as_rational_recognizes_small_fractions():
    assert as_rational(13 / 6) == "13/6"
    assert as_rational(13 / 42) == "13/42"
    assert as_rational(0.0) == "0"
    assert as_rational(1.0) == "1"
    assert as_rational(math.sqrt(2)) is None
    assert as_rational(math.pi / 4) is None


def test_number_entry():
    assert number_entry(5 / 6) == {"value": 0.833333333333, "rational": "5/6"}
    assert number_entry(math.e) == {"value": 2.71828182846}


def test_report_round_trips():
    doc = ReportDocument({"schema": 1, "items": [{"x": number_entry(1 / 3)}]})
    again = ReportDocument.from_json(doc.to_json())
    assert again.data == doc.data
    assert again.to_json() == doc.to_json()
