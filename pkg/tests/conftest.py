"""Pytest configuration and fixtures for mcs-tools tests.

Provides the small worked instances used across the suite: the five-vertex
hypergraph with its four binary strings, the four-variable 3-CNF formula,
and a factory for char-mode instances. File fixtures write into pytest's
``tmp_path``.

Examples
--------
Use fixtures in a test::

    def test_worked_instance_has_four_strings(worked_strings: InstanceSet) -> None:
        assert worked_strings.k == 4

"""

from __future__ import annotations

import typing as typ
from pathlib import (
    Path,  # noqa: TC003  # pytest resolves fixture annotations at runtime
)

import pytest

from mcs_tools.core import InstanceSet, SymbolMode
from mcs_tools.reductions.hypergraph import Hypergraph
from mcs_tools.reductions.sat import Cnf3, Literal

if typ.TYPE_CHECKING:
    import collections.abc as cabc

WORKED_EDGES = ((1, 2), (1, 3, 4), (3, 4, 5))
WORKED_STRINGS = ("0101010101", "0010010101", "00101001001", "01010010010")
WORKED_MCS = (
    "00100101",
    "00101001",
    "00101010",
    "01000101",
    "01001001",
    "01010101",
)
WORKED_MIS = ({1, 3, 5}, {1, 4, 5}, {2, 3, 4}, {2, 4, 5}, {2, 3, 5})

WORKED_DIMACS = """c three clauses over four variables
p cnf 4 3
1 -2 -3 0
2 -3 -4 0
-1 3 4 0
"""


def chars(*rows: str) -> InstanceSet:
    """Build a char-mode instance from plain strings."""
    return InstanceSet.from_tokens([list(r) for r in rows], mode=SymbolMode.CHARS)


@pytest.fixture
def make_instance() -> cabc.Callable[..., InstanceSet]:
    """Provide the char-mode instance factory."""
    return chars


@pytest.fixture
def worked_hypergraph() -> Hypergraph:
    """Provide the five-vertex hypergraph with edges {1,2}, {1,3,4}, {3,4,5}."""
    return Hypergraph.from_edges(5, WORKED_EDGES)


@pytest.fixture
def worked_strings() -> InstanceSet:
    """Provide the binary strings built from ``worked_hypergraph``."""
    return chars(*WORKED_STRINGS)


@pytest.fixture
def worked_mcs() -> list[str]:
    """Provide the six MCSs of ``worked_strings`` in lexicographic order."""
    return list(WORKED_MCS)


@pytest.fixture
def worked_mis() -> list[frozenset[int]]:
    """Provide the five maximal independent sets of ``worked_hypergraph``."""
    return [frozenset(u) for u in WORKED_MIS]


@pytest.fixture
def worked_dimacs() -> str:
    """Provide ``worked_formula`` as DIMACS text."""
    return WORKED_DIMACS


@pytest.fixture
def worked_formula() -> Cnf3:
    """Provide (x1 | !x2 | !x3) & (x2 | !x3 | !x4) & (!x1 | x3 | x4)."""
    return Cnf3.from_literals(
        4,
        [
            [Literal(1), Literal(2, positive=False), Literal(3, positive=False)],
            [Literal(2), Literal(3, positive=False), Literal(4, positive=False)],
            [Literal(1, positive=False), Literal(3), Literal(4)],
        ],
    )


@pytest.fixture
def write_file(tmp_path: Path) -> cabc.Callable[[str, str], Path]:
    """Provide a writer that stores text under ``tmp_path`` and returns its path.

    Parameters
    ----------
    tmp_path : Path
        pytest ``tmp_path`` fixture.

    Returns
    -------
    collections.abc.Callable[[str, str], Path]
        ``write(name, text)`` returning the written path.

    """

    def write(name: str, text: str) -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return write
