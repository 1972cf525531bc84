r"""Helper utilities for the mcs CLI commands.

Input reading (files or ``-`` for stdin), output destinations, known-set and
candidate parsing, and the text form of verification reports.

Examples
--------
Stream lines to a file or to stdout::

    from mcs_tools.cli.helpers import open_output

    with open_output(None) as out:
        out.write("ab\n")

"""

from __future__ import annotations

import contextlib
import random
import sys
import typing as typ

from mcs_tools.analysis import NotAnMcsInZ
from mcs_tools.core import AlphabetMismatchError, SymbolMode
from mcs_tools.formats import parse_sequences, parse_strings, read_strings

if typ.TYPE_CHECKING:
    import collections.abc as cabc
    from pathlib import Path

    from mcs_tools.core import InstanceSet, Seq
    from mcs_tools.reductions.hypergraph import BijectionReport
    from mcs_tools.reductions.sat import SatReductionReport

STDIN_MARKER = "-"


def read_stdin_text() -> str:
    """Read all text from stdin without modification."""
    return sys.stdin.read()


def read_input(path: Path) -> str:
    """Return the text of ``path``, or of stdin when the path is ``-``.

    Raises
    ------
    OSError
        If the file cannot be read.

    """
    if str(path) == STDIN_MARKER:
        return read_stdin_text()
    return path.read_text(encoding="utf-8")


def load_instance(path: Path) -> InstanceSet:
    """Read and parse a strings file, or stdin when the path is ``-``."""
    if str(path) == STDIN_MARKER:
        return parse_strings(read_stdin_text())
    return read_strings(path)


@contextlib.contextmanager
def open_output(output: Path | None) -> cabc.Iterator[typ.TextIO]:
    """Yield a text stream for ``output``; None means stdout.

    Files are written with ``\n`` line endings and closed on exit.
    """
    if output is None:
        yield sys.stdout
        sys.stdout.flush()
        return
    with output.open("w", encoding="utf-8", newline="\n") as fh:
        yield fh


def write_output(text: str, output: Path | None) -> None:
    """Write ``text`` to ``output`` (stdout when None)."""
    with open_output(output) as out:
        out.write(text)


def load_known(path: Path, inst: InstanceSet) -> list[Seq]:
    """Read a known-MCS file and encode it against ``inst``.

    Parameters
    ----------
    path : Path
        Strings file holding the known set; its mode decides how lines split.
    inst : InstanceSet
        Instance the members must belong to.

    Returns
    -------
    list[Seq]
        Known members over ``inst``'s alphabet.

    Raises
    ------
    NotAnMcsInZ
        If a member uses a symbol the instance does not have.

    """
    _, rows = parse_sequences(read_input(path))
    known: list[Seq] = []
    for row in rows:
        try:
            known.append(inst.encode(row))
        except AlphabetMismatchError:
            raise NotAnMcsInZ(row) from None
    return known


def parse_candidate(text: str, inst: InstanceSet) -> Seq | None:
    """Encode a command-line candidate, or None if it has a foreign symbol.

    The text splits into characters for char-mode instances and on
    whitespace otherwise.
    """
    tokens = list(text) if inst.mode is SymbolMode.CHARS else text.split()
    try:
        return inst.encode(tokens)
    except AlphabetMismatchError:
        return None


def seeded_rng(seed: int | None) -> random.Random:
    """Return the generator every random command draws from."""
    return random.Random(seed)  # noqa: S311


_YES_NO = {True: "yes", False: "no"}


def _vertex_set(u: cabc.Iterable[int]) -> str:
    return "{" + ",".join(map(str, sorted(u))) + "}"


def _listing(items: cabc.Iterable[str]) -> str:
    return ", ".join(items) or "none"


def bijection_lines(report: BijectionReport) -> list[str]:
    """Render a hypergraph verification report."""
    return [
        "kind: hypergraph",
        f"w present: {_YES_NO[report.w_present]}",
        f"mis: {report.mis_count}",
        f"mcs: {report.mcs_count}",
        f"missing: {_listing(_vertex_set(u) for u in report.missing)}",
        f"unexpected: {_listing(report.unexpected)}",
        f"with 11: {_listing(report.with_11)}",
        f"dependent: {_listing(report.dependent)}",
        f"result: {'PASS' if report.passed else 'FAIL'}",
    ]


def sat_lines(report: SatReductionReport) -> list[str]:
    """Render a SAT verification report."""
    witness = " ".join(report.witness) if report.witness is not None else "none"
    satisfies = (
        "n/a"
        if report.witness_satisfies is None
        else _YES_NO[report.witness_satisfies]
    )
    return [
        "kind: cnf",
        f"known all maximal: {_YES_NO[report.known_all_maximal]}",
        f"satisfiable: {_YES_NO[report.satisfiable]}",
        f"witness: {witness}",
        f"witness satisfies: {satisfies}",
        f"result: {'PASS' if report.passed else 'FAIL'}",
    ]
