"""Text-format round trips and validation errors."""

import pytest

from doobcodes import DoobParams, VertexSet
from doobcodes.fileio import (
    format_doobcol,
    format_doobset,
    format_partition,
    parse_doobcol,
    parse_doobset,
    parse_partition,
)
from doobcodes.graphs import FormatError

SH = DoobParams(1, 0)


def test_doobset_round_trip():
    s = VertexSet.from_indices(SH, [0, 2, 8, 10])
    text = format_doobset(s)
    assert text == "doob 1 0\n0\n2\n8\n10\n"
    assert parse_doobset(text) == s


def test_doobset_empty_set():
    s = VertexSet(DoobParams(0, 2), 0)
    assert parse_doobset(format_doobset(s)) == s


def test_doobset_errors():
    with pytest.raises(FormatError):
        parse_doobset("")
    with pytest.raises(FormatError):
        parse_doobset("doob 1\n0\n")
    with pytest.raises(FormatError):
        parse_doobset("doob 0 0\n")
    with pytest.raises(FormatError):
        parse_doobset("doob 1 0\n3\n1\n")  # not ascending
    with pytest.raises(FormatError):
        parse_doobset("doob 1 0\n2\n2\n")  # duplicate
    with pytest.raises(FormatError):
        parse_doobset("doob 1 0\n16\n")  # out of range
    with pytest.raises(FormatError):
        parse_doobset("doob 1 0\nabc\n")


def test_doobcol_round_trip():
    params = DoobParams(0, 1)
    colors = (0, 3, 1, 2)
    text = format_doobcol(params, colors)
    assert text == "doob 0 1\n00\n11\n01\n10\n"
    assert parse_doobcol(text) == (params, colors)


def test_doobcol_errors():
    with pytest.raises(FormatError):
        parse_doobcol("doob 0 1\n00\n11\n01\n")  # wrong line count
    with pytest.raises(FormatError):
        parse_doobcol("doob 0 1\n00\n11\n01\n20\n")  # bad digits
    with pytest.raises(FormatError):
        format_doobcol(DoobParams(0, 1), [0, 1])


def test_partition_round_trip():
    a = VertexSet.from_indices(SH, [0, 1])
    b = a.complement()
    text = format_partition(a, b)
    pa, pb = parse_partition(text)
    assert (pa, pb) == (a, b)


def test_partition_errors():
    a = VertexSet.from_indices(SH, [0, 1])
    with pytest.raises(FormatError):
        parse_partition(format_doobset(a))
    mixed = format_doobset(a) + "---\n" + format_doobset(VertexSet(DoobParams(0, 2), 1))
    with pytest.raises(FormatError):
        parse_partition(mixed)
