import pytest
from hypothesis import given

from conftest import pc_digraphs
from pcdfs.pcdg import ParseError, parse, serialize

MIXED = """\
pcdg 1
n 4
v 1 c : 3
v 2 u : 1
v 3 u :
v 4 u : 2
"""


def test_parse_minimal():
    g = parse("pcdg 1\nn 1\nv 1 u :\n")
    assert g.n == 1
    assert g.entries(1) == []
    assert g.cell_vertex[g.list_head[1]] == 2  # sentinel only


def test_parse_mixed_example():
    g = parse(MIXED)
    assert g.m_tilde == 3
    assert g.complemented[1:] == [True, False, False, False]
    assert g.entry_lists() == [[], [3], [1], [], [2]]
    assert serialize(g) == MIXED


def test_parse_accepts_comments_blanks_and_unsorted_entries():
    text = """\
# a comment
pcdg 1

n 3
v 1 u : 3 2
# trailing comment
v 2 c :
v 3 u :
"""
    g = parse(text)
    assert g.entries(1) == [2, 3]
    assert serialize(g) == "pcdg 1\nn 3\nv 1 u : 2 3\nv 2 c :\nv 3 u :\n"


def err(text):
    with pytest.raises(ParseError) as excinfo:
        parse(text)
    return excinfo.value


def test_parse_rejects_zero_n():
    e = err("pcdg 1\nn 0\n")
    assert "n must be ≥ 1" in str(e)
    assert e.lineno == 2


def test_parse_rejects_bad_header():
    assert "header" in str(err("pcdg 2\nn 1\nv 1 u :\n"))
    assert "header" in str(err(""))
    assert "expected 'n" in str(err("pcdg 1\nv 1 u :\n"))


def test_parse_rejects_malformed_vertex_lines():
    assert "vertex line" in str(err("pcdg 1\nn 1\nx 1 u :\n"))
    assert "v <id> <c|u>" in str(err("pcdg 1\nn 1\nv 1 u\n"))
    assert "flag" in str(err("pcdg 1\nn 1\nv 1 z :\n"))
    assert "not an integer" in str(err("pcdg 1\nn 1\nv one u :\n"))


def test_parse_rejects_vertex_ordering_problems():
    assert "duplicate or out-of-order" in str(
        err("pcdg 1\nn 2\nv 1 u :\nv 1 u :\n"))
    assert "expected vertex 1" in str(err("pcdg 1\nn 2\nv 2 u :\n"))
    assert "missing vertex line" in str(err("pcdg 1\nn 2\nv 1 u :\n"))
    assert "missing vertex line for vertex 1" in str(err("pcdg 1\nn 2\n"))
    e = err("pcdg 1\nn 1\nv 1 u :\nv 2 u :\n")
    assert "extra vertex line" in str(e) and e.lineno == 4


def test_parse_rejects_bad_entries():
    assert "out of range" in str(err("pcdg 1\nn 2\nv 1 u : 3\nv 2 u :\n"))
    assert "self-entry" in str(err("pcdg 1\nn 2\nv 1 u : 1\nv 2 u :\n"))
    assert "duplicate entry" in str(
        err("pcdg 1\nn 3\nv 1 u : 2 2\nv 2 u :\nv 3 u :\n"))
    assert "not an integer" in str(
        err("pcdg 1\nn 2\nv 1 u : x\nv 2 u :\n"))


def test_parse_error_carries_line_number():
    e = err("pcdg 1\nn 3\nv 1 u :\nv 2 u : 9\nv 3 u :\n")
    assert e.lineno == 4
    assert str(e).startswith("line 4:")


@given(pc_digraphs())
def test_round_trip_identity(g):
    text = serialize(g)
    back = parse(text)
    assert back == g
    assert serialize(back) == text
