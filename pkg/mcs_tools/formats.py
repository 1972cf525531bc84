"""Text formats for strings files, DIMACS CNF, and hypergraph files.

Strings files start with ``mode tokens`` or ``mode chars``; every further
nonempty line that does not begin with ``#`` is one string. The line
``#empty`` stands for the empty string, which a blank line cannot spell. DIMACS files
follow the usual ``p cnf v m`` layout. Hypergraph files use a ``p hg n m``
header followed by one line of vertex ids per edge.

Examples
--------
Parse a two-string instance::

    from mcs_tools.formats import parse_strings

    inst = parse_strings("mode chars\\nab\\nba\\n")
    inst.k  # 2

"""

from __future__ import annotations

import typing as typ

from mcs_tools.core import InstanceSet, SymbolMode
from mcs_tools.reductions.hypergraph import Hypergraph
from mcs_tools.reductions.sat import CLAUSE_WIDTH, Cnf3, Literal

if typ.TYPE_CHECKING:
    import collections.abc as cabc
    from pathlib import Path

    from mcs_tools.core import Seq

type Kind = typ.Literal["cnf", "hypergraph"]

_HEADER_FIELDS = 4
EMPTY_LINE = "#empty"


class FormatError(ValueError):
    """Input text does not follow the expected file format.

    Attributes
    ----------
    line : int | None
        1-based line number of the problem, when known.

    """

    def __init__(self, message: str, *, line: int | None = None) -> None:
        """Create the error, optionally naming the line."""
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


def _content_lines(
    text: str, comment: str, *, keep: str | None = None
) -> cabc.Iterator[tuple[int, str]]:
    """Yield numbered, stripped lines that are neither blank nor comments.

    A line equal to ``keep`` is yielded even though it looks like a comment.
    """
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line == keep or (line and not line.startswith(comment)):
            yield number, line


def _split(line: str, mode: SymbolMode) -> list[str]:
    if line == EMPTY_LINE:
        return []
    return list(line) if mode is SymbolMode.CHARS else line.split()


def parse_sequences(text: str) -> tuple[SymbolMode, list[list[str]]]:
    """Read a strings file into its mode and token rows.

    Raises
    ------
    FormatError
        If the ``mode`` header is missing or names an unknown mode.

    """
    lines = _content_lines(text, "#", keep=EMPTY_LINE)
    first = next(lines, None)
    if first is None:
        msg = "missing 'mode tokens' or 'mode chars' header"
        raise FormatError(msg)
    number, header = first
    match header.split():
        case ["mode", ("tokens" | "chars") as name]:
            mode = SymbolMode(name)
        case _:
            msg = f"expected 'mode tokens' or 'mode chars', got {header!r}"
            raise FormatError(msg, line=number)
    return mode, [_split(line, mode) for _, line in lines]


def parse_strings(text: str) -> InstanceSet:
    """Parse a strings file into an instance.

    Raises
    ------
    FormatError
        If the header is malformed or the file holds no strings.

    """
    mode, rows = parse_sequences(text)
    if not rows:
        msg = "strings file holds no strings"
        raise FormatError(msg)
    return InstanceSet.from_tokens(rows, mode=mode)


def read_strings(path: Path) -> InstanceSet:
    """Read and parse a strings file from disk."""
    return parse_strings(path.read_text(encoding="utf-8"))


def render_seq(seq: Seq, mode: SymbolMode) -> str:
    """Spell ``seq`` as one line: concatenated chars or space-joined tokens."""
    sep = "" if mode is SymbolMode.CHARS else " "
    return sep.join(seq.tokens)


def render_sequences(mode: SymbolMode, seqs: cabc.Iterable[Seq]) -> str:
    """Render a strings file holding ``seqs``."""
    lines = [f"mode {mode}", *(render_seq(s, mode) or EMPTY_LINE for s in seqs)]
    return "\n".join(lines) + "\n"


def render_strings(inst: InstanceSet) -> str:
    """Render the strings file of ``inst``."""
    return render_sequences(inst.mode, inst.strings)


def _header(line: str, number: int, tag: str) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != _HEADER_FIELDS or parts[:2] != ["p", tag]:
        msg = f"expected 'p {tag} <count> <count>', got {line!r}"
        raise FormatError(msg, line=number)
    try:
        first, second = int(parts[2]), int(parts[3])
    except ValueError:
        msg = f"header counts must be integers, got {line!r}"
        raise FormatError(msg, line=number) from None
    if first < 0 or second < 0:
        msg = "header counts must be non-negative"
        raise FormatError(msg, line=number)
    return first, second


def _ints(line: str, number: int) -> list[int]:
    try:
        return [int(part) for part in line.split()]
    except ValueError:
        msg = f"expected integers, got {line!r}"
        raise FormatError(msg, line=number) from None


def parse_dimacs(text: str) -> Cnf3:
    """Parse a DIMACS CNF file holding a 3-CNF formula.

    Clauses may span lines; each ends at a ``0``.

    Raises
    ------
    FormatError
        On a missing header, a clause without exactly three literals, a
        variable outside ``1..v``, or a clause count that disagrees with the
        header.
    InvalidFormula
        If a clause repeats a variable or holds a complementary pair.

    """
    lines = _content_lines(text, "c")
    first = next(lines, None)
    if first is None:
        msg = "missing 'p cnf' header"
        raise FormatError(msg)
    v, m = _header(first[1], first[0], "cnf")
    clauses = list(_dimacs_clauses(lines, v))
    if len(clauses) != m:
        msg = f"header declares {m} clauses, found {len(clauses)}"
        raise FormatError(msg)
    return Cnf3.from_literals(v, clauses)


def _dimacs_clauses(
    lines: cabc.Iterable[tuple[int, str]], v: int
) -> cabc.Iterator[list[Literal]]:
    """Group literals into clauses at each ``0``; stop at a ``%`` line."""
    current: list[Literal] = []
    for number, line in lines:
        if line.startswith("%"):
            break
        for value in _ints(line, number):
            if value == 0:
                if len(current) != CLAUSE_WIDTH:
                    msg = (
                        f"clause has {len(current)} literals, "
                        f"expected {CLAUSE_WIDTH}"
                    )
                    raise FormatError(msg, line=number)
                yield current
                current = []
            elif abs(value) > v:
                msg = f"variable {abs(value)} outside 1..{v}"
                raise FormatError(msg, line=number)
            else:
                current.append(Literal.from_dimacs(value))
    if current:
        msg = "last clause is not terminated by 0"
        raise FormatError(msg)


def render_dimacs(phi: Cnf3) -> str:
    """Render ``phi`` as DIMACS CNF, one clause per line."""
    lines = [f"p cnf {phi.v} {phi.m}"]
    lines.extend(
        " ".join(str(lit.to_dimacs()) for lit in clause) + " 0"
        for clause in phi.clauses
    )
    return "\n".join(lines) + "\n"


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse a hypergraph file.

    Raises
    ------
    FormatError
        On a missing header, an edge count that disagrees with the header, or
        an invalid edge.

    """
    lines = _content_lines(text, "#")
    first = next(lines, None)
    if first is None:
        msg = "missing 'p hg' header"
        raise FormatError(msg)
    n, m = _header(first[1], first[0], "hg")
    edges = [_ints(line, number) for number, line in lines]
    if len(edges) != m:
        msg = f"header declares {m} edges, found {len(edges)}"
        raise FormatError(msg)
    try:
        return Hypergraph.from_edges(n, edges)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def render_hypergraph(h: Hypergraph) -> str:
    """Render ``h`` in the hypergraph file format."""
    lines = [f"p hg {h.n} {h.m}", *(" ".join(map(str, e)) for e in h.edges)]
    return "\n".join(lines) + "\n"


def sniff_kind(text: str) -> Kind:
    """Tell a DIMACS file from a hypergraph file by its header.

    Raises
    ------
    FormatError
        If neither header is found.

    """
    for raw in text.splitlines():
        parts = raw.split()
        if parts[:2] == ["p", "cnf"]:
            return "cnf"
        if parts[:2] == ["p", "hg"]:
            return "hypergraph"
    msg = "no 'p cnf' or 'p hg' header found"
    raise FormatError(msg)
