from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import golden
from cwbd.design import Design
from cwbd.designio import (DesignFormatError, design_to_csv, design_to_json, parse_csv, parse_json,
                           read_design, read_matrix, write_design)

designs = st.integers(2, 8).flatmap(
    lambda t: st.lists(st.lists(st.integers(0, t - 1), min_size=t, max_size=t), min_size=0, max_size=6)
    .map(lambda cols: Design.from_columns(t, cols) if cols else Design.empty(t)))


@settings(max_examples=100, deadline=None)
@given(designs)
def test_roundtrip(d):
    assert parse_json(design_to_json(d)) == d
    if d.n:
        assert parse_csv(design_to_csv(d)) == d


def test_json_layout():
    d = Design(7, 3, golden.FIG1A)
    obj = json.loads(design_to_json(d))
    assert obj == {"t": 7, "n": 3, "periods": golden.FIG1A}


def test_files(tmp_path):
    d = Design(7, 3, golden.FIG1A)
    for name in ("a.json", "a.csv"):
        write_design(d, tmp_path / name)
        assert read_design(tmp_path / name) == d
    assert (tmp_path / "a.csv").read_text().splitlines()[1] == "1,2,4"


def test_json_errors_have_positions():
    with pytest.raises(DesignFormatError) as e:
        parse_json('{"t": 3, "n": 1,\n "periods": [[0], [1], [7]]}')
    assert (e.value.line, e.value.column) == (2, 25)
    with pytest.raises(DesignFormatError) as e:
        parse_json('{"t": 3,, }')
    assert e.value.line == 1 and e.value.column == 9
    with pytest.raises(DesignFormatError):
        parse_json('{"t": 3, "n": 2, "periods": [[0, 1], [1]]}')
    with pytest.raises(DesignFormatError):
        parse_json('{"t": 3}')
    with pytest.raises(DesignFormatError):
        parse_json('{"t": 2, "n": 1, "periods": [[0], [true]]}')


def test_csv_errors_have_positions():
    with pytest.raises(DesignFormatError) as e:
        parse_csv("0,1\n1,zz\n")
    assert (e.value.line, e.value.column) == (2, 3)
    with pytest.raises(DesignFormatError) as e:
        parse_csv("0,1\n1\n")
    assert e.value.line == 2
    with pytest.raises(DesignFormatError) as e:
        parse_csv("0,1\n1,2\n")
    assert (e.value.line, e.value.column) == (2, 2)
    with pytest.raises(DesignFormatError):
        parse_csv("")


def test_read_matrix(tmp_path):
    p = tmp_path / "m.json"
    p.write_text(json.dumps(golden.III32))
    assert read_matrix(p) == golden.III32
    p.write_text(json.dumps({"adjacency": golden.III32}))
    assert read_matrix(p) == golden.III32
    q = tmp_path / "m.csv"
    q.write_text("0,1\n1,0\n")
    assert read_matrix(q) == [[0, 1], [1, 0]]
    q.write_text("0,2\n1,0\n")
    with pytest.raises(DesignFormatError):
        read_matrix(q)
