"""Tests for strings, DIMACS, and hypergraph file formats."""

from __future__ import annotations

import typing as typ

import pytest

from mcs_tools.core import SymbolMode
from mcs_tools.formats import (
    FormatError,
    parse_dimacs,
    parse_hypergraph,
    parse_sequences,
    parse_strings,
    read_strings,
    render_dimacs,
    render_hypergraph,
    render_seq,
    render_sequences,
    render_strings,
    sniff_kind,
)
from mcs_tools.reductions.sat import InvalidFormula, Literal

if typ.TYPE_CHECKING:
    import collections.abc as cabc
    from pathlib import Path

    from mcs_tools.core import InstanceSet
    from mcs_tools.reductions.hypergraph import Hypergraph
    from mcs_tools.reductions.sat import Cnf3

type MakeInstance = cabc.Callable[..., InstanceSet]


def test_parse_strings_token_mode() -> None:
    """Test that token lines split on whitespace and comments are skipped."""
    inst = parse_strings("# two strings\nmode tokens\nx1 !x1 x2\n\n!x1  x2\n")
    assert inst.mode is SymbolMode.TOKENS, "header selects token mode"
    assert [s.tokens for s in inst.strings] == [
        ("x1", "!x1", "x2"),
        ("!x1", "x2"),
    ], "tokens should be split on runs of whitespace"


def test_parse_strings_char_mode() -> None:
    """Test that char lines split into single characters."""
    inst = parse_strings("mode chars\nabc\nca\n")
    assert [s.tokens for s in inst.strings] == [("a", "b", "c"), ("c", "a")], (
        "each character is a symbol"
    )


@pytest.mark.parametrize(
    ("text", "match"),
    [
        ("", "missing 'mode"),
        ("# only a comment\n", "missing 'mode"),
        ("mode bytes\nab\n", "line 1: expected 'mode tokens'"),
        ("abc\nmode chars\n", "line 1"),
        ("mode chars\n", "holds no strings"),
    ],
)
def test_parse_strings_errors(text: str, match: str) -> None:
    """Test malformed strings files."""
    with pytest.raises(FormatError, match=match):
        parse_strings(text)


def test_parse_sequences_allows_no_rows() -> None:
    """Test that a bare header parses to an empty row list."""
    assert parse_sequences("mode tokens\n") == (SymbolMode.TOKENS, []), (
        "known-set files may be empty"
    )


@pytest.mark.parametrize("mode", ["chars", "tokens"])
def test_empty_marker_reads_as_empty_row(mode: str) -> None:
    """Test ``#empty`` is the empty string while other ``#`` lines are comments."""
    text = f"mode {mode}\n# note\n#empty\nab\n"
    _, rows = parse_sequences(text)
    assert rows[0] == [], "marker should give an empty row"
    assert len(rows) == 2, "the comment is still skipped"


def test_render_sequences_writes_empty_marker(make_instance: MakeInstance) -> None:
    """Test an empty sequence is written as ``#empty`` and read back."""
    inst = make_instance("ab", "cd")
    empty = inst.encode([])
    text = render_sequences(SymbolMode.CHARS, [empty, inst.strings[0]])
    assert text == "mode chars\n#empty\nab\n", "empty line uses the marker"
    assert parse_sequences(text)[1] == [[], ["a", "b"]], "marker round trip"


def test_render_strings_reparses(make_instance: MakeInstance) -> None:
    """Test that rendering writes the header and one line per string."""
    inst = make_instance("0101", "001")
    text = render_strings(inst)
    assert text == "mode chars\n0101\n001\n", "char mode concatenates symbols"
    assert parse_strings(text) == inst, "rendered text should parse back"


def test_render_seq_token_mode() -> None:
    """Test that token mode separates symbols with spaces."""
    inst = parse_strings("mode tokens\nx1 !x2\n")
    assert render_seq(inst.strings[0], SymbolMode.TOKENS) == "x1 !x2", "spaced"


def test_read_strings(write_file: cabc.Callable[[str, str], Path]) -> None:
    """Test reading a strings file from disk."""
    path = write_file("in.txt", "mode chars\nab\nba\n")
    assert read_strings(path).k == 2, "two strings expected"


def test_parse_dimacs_worked(worked_dimacs: str, worked_formula: Cnf3) -> None:
    """Test the worked DIMACS text parses to the worked formula."""
    assert parse_dimacs(worked_dimacs) == worked_formula, "formula mismatch"


def test_parse_dimacs_multiline_clause() -> None:
    """Test that a clause may span lines and a ``%`` line ends the file."""
    phi = parse_dimacs("p cnf 3 1\n1\n-2 3\n0\n%\n0\n")
    assert phi.clauses == ((Literal(1), Literal(2, positive=False), Literal(3)),), (
        "literals should be gathered up to the 0"
    )


def test_render_dimacs(worked_formula: Cnf3, worked_dimacs: str) -> None:
    """Test that rendering writes the header and one clause per line."""
    text = render_dimacs(worked_formula)
    assert text.splitlines()[0] == "p cnf 4 3", "header line"
    assert text.splitlines()[1] == "1 -2 -3 0", "first clause"
    assert parse_dimacs(text) == parse_dimacs(worked_dimacs), "should reparse"


@pytest.mark.parametrize(
    ("text", "match"),
    [
        ("c nothing\n", "missing 'p cnf'"),
        ("p cnf 3\n1 2 3 0\n", "line 1: expected 'p cnf"),
        ("p cnf x 1\n1 2 3 0\n", "must be integers"),
        ("p cnf 3 1\n1 2 0\n", "line 2: clause has 2 literals"),
        ("p cnf 3 1\n1 2 4 0\n", "variable 4 outside"),
        ("p cnf 3 1\n1 2 a 0\n", "expected integers"),
        ("p cnf 3 2\n1 2 3 0\n", "declares 2 clauses, found 1"),
        ("p cnf 3 1\n1 2 3\n", "not terminated"),
    ],
)
def test_parse_dimacs_format_errors(text: str, match: str) -> None:
    """Test malformed DIMACS files."""
    with pytest.raises(FormatError, match=match):
        parse_dimacs(text)


def test_parse_dimacs_rejects_complementary_pair() -> None:
    """Test that a clause with x and !x is an invalid formula."""
    with pytest.raises(InvalidFormula, match="clause 1: repeated or complementary"):
        parse_dimacs("p cnf 3 1\n1 -1 2 0\n")


def test_parse_hypergraph(worked_hypergraph: Hypergraph) -> None:
    """Test that edges are read and sorted."""
    h = parse_hypergraph("# worked\np hg 5 3\n2 1\n1 3 4\n5 4 3\n")
    assert h == worked_hypergraph, "edges should be normalised"


def test_render_hypergraph(worked_hypergraph: Hypergraph) -> None:
    """Test the rendered hypergraph layout."""
    assert render_hypergraph(worked_hypergraph) == "p hg 5 3\n1 2\n1 3 4\n3 4 5\n", (
        "header then one edge per line"
    )


@pytest.mark.parametrize(
    ("text", "match"),
    [
        ("", "missing 'p hg'"),
        ("p hg 3 2\n1 2\n", "declares 2 edges, found 1"),
        ("p hg 3 1\n1 7\n", "edge 1: vertex outside 1..3"),
        ("p hg 3 2\n1 2\n2 1\n", "edge 2: duplicate hyperedge"),
        ("p hg 3 -1\n", "non-negative"),
    ],
)
def test_parse_hypergraph_errors(text: str, match: str) -> None:
    """Test malformed hypergraph files."""
    with pytest.raises(FormatError, match=match):
        parse_hypergraph(text)


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("c comment\np cnf 1 0\n", "cnf"),
        ("# comment\np hg 2 1\n1\n", "hypergraph"),
    ],
)
def test_sniff_kind(text: str, expected: str) -> None:
    """Test that the header decides the input kind."""
    assert sniff_kind(text) == expected, f"should detect {expected}"


def test_sniff_kind_unknown() -> None:
    """Test that text without a known header is rejected."""
    with pytest.raises(FormatError, match="no 'p cnf' or 'p hg'"):
        sniff_kind("mode chars\nab\n")
