"""Command-line interface for mcs-tools.

Provides the ``mcs`` CLI for enumerating, counting, and assessing maximal
common subsequences, for building and verifying the SAT and hypergraph
constructions, and for sampling seeded random inputs. Decisions ride on the
exit status: 0 success, 1 negative answer, 2 bad input, 3 budget exceeded,
4 invalid known set, 5 construction assumption violated.

Examples
--------
List the MCSs of a strings file::

    mcs enumerate strings.txt

Build the binary strings of a hypergraph and count their MCSs::

    mcs gen-hypergraph graph.hg --output graph.txt
    mcs count graph.txt

"""

from __future__ import annotations

import logging
import sys
import typing as typ
from pathlib import Path  # noqa: TC003  # cyclopts resolves annotations at runtime

import cyclopts

from mcs_tools import __version__
from mcs_tools.analysis import NotAnMcsInZ, another_mcs, assess_mcs, count_mcs
from mcs_tools.cli.helpers import (
    bijection_lines,
    load_instance,
    load_known,
    open_output,
    parse_candidate,
    read_input,
    sat_lines,
    seeded_rng,
    write_output,
)
from mcs_tools.config import (
    DEFAULT_MASK_CAP,
    DEFAULT_TUPLE_CAP,
    DEFAULT_VARIABLE_CAP,
    DEFAULT_VERTEX_CAP,
    RunConfig,
    configure_logging,
)
from mcs_tools.core import LimitExceeded, is_mcs
from mcs_tools.enumerator import iter_mcs
from mcs_tools.formats import (
    parse_dimacs,
    parse_hypergraph,
    render_dimacs,
    render_hypergraph,
    render_seq,
    render_sequences,
    render_strings,
    sniff_kind,
)
from mcs_tools.generators import random_cnf, random_hypergraph, random_instance
from mcs_tools.oracle import enumerate_bruteforce
from mcs_tools.reductions.hypergraph import (
    build_hypergraph_instance,
    verify_bijection,
)
from mcs_tools.reductions.sat import (
    ReductionAssumptionError,
    build_sat_instance,
    verify_sat_reduction,
)

logger = logging.getLogger(__name__)

EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_LIMIT = 3
EXIT_INVALID_KNOWN = 4
EXIT_ASSUMPTION = 5
EXIT_INTERRUPTED = 130

KNOWN_SUFFIX = ".known"

app = cyclopts.App(
    name="mcs",
    help="Maximal common subsequence enumeration and hardness constructions.",
    version=__version__,
    version_flags=["--version", "-V"],
)


@app.default
def main_help() -> None:
    """Show the help message when no command is specified."""
    app.parse_args(["--help"])


@app.command(name="enumerate")
def enumerate_cmd(
    path: Path,
    *,
    tuple_cap: int = DEFAULT_TUPLE_CAP,
    output: Path | None = None,
) -> int:
    """Print every MCS, one per line, in lexicographic symbol order.

    Parameters
    ----------
    path : Path
        Strings file, or ``-`` for stdin.
    tuple_cap : int, optional
        Largest unshiftable index to build.
    output : Path | None, optional
        Destination file (defaults to stdout).

    Returns
    -------
    int
        Exit code (0 on success). The count goes to stderr.

    """
    config = RunConfig(tuple_cap=tuple_cap, output=output)
    inst = load_instance(path)
    count = 0
    with open_output(config.output) as out:
        for mcs in iter_mcs(inst, tuple_cap=config.tuple_cap):
            out.write(render_seq(mcs, inst.mode) + "\n")
            count += 1
    sys.stderr.write(f"count: {count}\n")
    return 0


@app.command(name="enumerate-bruteforce")
def enumerate_bruteforce_cmd(
    path: Path,
    *,
    mask_cap: int = DEFAULT_MASK_CAP,
    output: Path | None = None,
) -> int:
    """Print every MCS using the exhaustive oracle.

    Parameters
    ----------
    path : Path
        Strings file, or ``-`` for stdin.
    mask_cap : int, optional
        Largest number of subsequence masks to try.
    output : Path | None, optional
        Destination file (defaults to stdout).

    Returns
    -------
    int
        Exit code (0 on success). The count goes to stderr.

    """
    config = RunConfig(mask_cap=mask_cap, output=output)
    inst = load_instance(path)
    found = enumerate_bruteforce(inst, mask_cap=config.mask_cap)
    with open_output(config.output) as out:
        for mcs in found:
            out.write(render_seq(mcs, inst.mode) + "\n")
    sys.stderr.write(f"count: {found.cardinality}\n")
    return 0


@app.command
def count(path: Path, *, tuple_cap: int = DEFAULT_TUPLE_CAP) -> int:
    """Print the number of MCSs.

    Parameters
    ----------
    path : Path
        Strings file, or ``-`` for stdin.
    tuple_cap : int, optional
        Largest unshiftable index to build.

    """
    config = RunConfig(tuple_cap=tuple_cap)
    total = count_mcs(load_instance(path), tuple_cap=config.tuple_cap)
    sys.stdout.write(f"{total}\n")
    return 0


@app.command
def assess(path: Path, *, z: int, tuple_cap: int = DEFAULT_TUPLE_CAP) -> int:
    """Print ``MORE`` if there are more than ``z`` MCSs, else ``AT_MOST``.

    Parameters
    ----------
    path : Path
        Strings file, or ``-`` for stdin.
    z : int
        Non-negative threshold.
    tuple_cap : int, optional
        Largest unshiftable index to build.

    Returns
    -------
    int
        Exit code (0 for either verdict).

    """
    config = RunConfig(tuple_cap=tuple_cap)
    outcome = assess_mcs(load_instance(path), z, tuple_cap=config.tuple_cap)
    sys.stdout.write("MORE\n" if outcome.verdict else "AT_MOST\n")
    return 0


@app.command
def another(
    path: Path, *, known: Path, tuple_cap: int = DEFAULT_TUPLE_CAP
) -> int:
    """Print an MCS missing from the known set, or ``NONE``.

    Parameters
    ----------
    path : Path
        Strings file, or ``-`` for stdin.
    known : Path
        Strings file of MCSs already known.
    tuple_cap : int, optional
        Largest unshiftable index to build.

    Returns
    -------
    int
        Exit code (0 if a new MCS exists, 1 if not).

    """
    config = RunConfig(tuple_cap=tuple_cap)
    inst = load_instance(path)
    found = another_mcs(inst, load_known(known, inst), tuple_cap=config.tuple_cap)
    if found is None:
        sys.stdout.write("NONE\n")
        return EXIT_NEGATIVE
    sys.stdout.write(render_seq(found, inst.mode) + "\n")
    return 0


@app.command(name="check-maximal")
def check_maximal(path: Path, *, candidate: str) -> int:
    """Print ``MAXIMAL`` when the candidate is an MCS, else ``NOT_MAXIMAL``.

    Parameters
    ----------
    path : Path
        Strings file, or ``-`` for stdin.
    candidate : str
        Candidate string, split like a line of the strings file.

    Returns
    -------
    int
        Exit code (0 if maximal, 1 if not).

    """
    inst = load_instance(path)
    seq = parse_candidate(candidate, inst)
    if seq is not None and is_mcs(seq, inst):
        sys.stdout.write("MAXIMAL\n")
        return 0
    sys.stdout.write("NOT_MAXIMAL\n")
    return EXIT_NEGATIVE


@app.command(name="gen-sat")
def gen_sat(
    path: Path,
    *,
    output: Path | None = None,
    known_output: Path | None = None,
) -> int:
    """Build the token-mode strings and known MCSs of a DIMACS formula.

    Parameters
    ----------
    path : Path
        DIMACS CNF file, or ``-`` for stdin.
    output : Path | None, optional
        Strings file destination (defaults to stdout).
    known_output : Path | None, optional
        Known-MCS file destination; defaults to ``<output>.known`` when
        ``--output`` is given and is skipped otherwise.

    """
    reduction = build_sat_instance(parse_dimacs(read_input(path)))
    write_output(render_strings(reduction.strings), output)
    if known_output is None and output is not None:
        known_output = output.with_name(output.name + KNOWN_SUFFIX)
    if known_output is None:
        logger.info("gen-sat: known MCSs not written (no destination)")
        return 0
    mode = reduction.strings.mode
    write_output(render_sequences(mode, reduction.known_mcs), known_output)
    return 0


@app.command(name="gen-hypergraph")
def gen_hypergraph(path: Path, *, output: Path | None = None) -> int:
    """Build the char-mode binary strings of a hypergraph file.

    Parameters
    ----------
    path : Path
        Hypergraph file, or ``-`` for stdin.
    output : Path | None, optional
        Strings file destination (defaults to stdout).

    """
    reduction = build_hypergraph_instance(parse_hypergraph(read_input(path)))
    write_output(render_strings(reduction.strings), output)
    return 0


@app.command
def verify(  # noqa: PLR0913
    path: Path,
    *,
    method: typ.Literal["enumerator", "oracle"] = "enumerator",
    mask_cap: int = DEFAULT_MASK_CAP,
    tuple_cap: int = DEFAULT_TUPLE_CAP,
    variable_cap: int = DEFAULT_VARIABLE_CAP,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> int:
    """Check a construction against brute force and print a report.

    Parameters
    ----------
    path : Path
        DIMACS or hypergraph file, or ``-`` for stdin.
    method : {"enumerator", "oracle"}, optional
        How hypergraph MCSs are enumerated.
    mask_cap : int, optional
        Oracle mask budget.
    tuple_cap : int, optional
        Largest unshiftable index to build.
    variable_cap : int, optional
        Largest formula for the SAT oracle.
    vertex_cap : int, optional
        Largest hypergraph for the MIS oracle.

    Returns
    -------
    int
        Exit code (0 on pass, 1 on fail).

    """
    config = RunConfig(
        mask_cap=mask_cap,
        tuple_cap=tuple_cap,
        variable_cap=variable_cap,
        vertex_cap=vertex_cap,
    )
    lines, passed = _verify_text(read_input(path), method, config)
    sys.stdout.write("\n".join(lines) + "\n")
    return 0 if passed else EXIT_NEGATIVE


def _verify_text(
    text: str, method: typ.Literal["enumerator", "oracle"], config: RunConfig
) -> tuple[list[str], bool]:
    if sniff_kind(text) == "cnf":
        sat_report = verify_sat_reduction(
            parse_dimacs(text),
            variable_cap=config.variable_cap,
            tuple_cap=config.tuple_cap,
        )
        return sat_lines(sat_report), sat_report.passed
    hg_report = verify_bijection(
        parse_hypergraph(text),
        method=method,
        vertex_cap=config.vertex_cap,
        mask_cap=config.mask_cap,
        tuple_cap=config.tuple_cap,
    )
    return bijection_lines(hg_report), hg_report.passed


@app.command(name="random-strings")
def random_strings(  # noqa: PLR0913
    *,
    k: int = 3,
    alphabet_size: int = 2,
    max_len: int = 8,
    min_len: int = 1,
    seed: int | None = None,
    output: Path | None = None,
) -> int:
    """Write a seeded random char-mode strings file.

    Parameters
    ----------
    k : int, optional
        Number of strings.
    alphabet_size : int, optional
        Symbols drawn from the first letters ``a, b, c, ...``.
    max_len : int, optional
        Longest string.
    min_len : int, optional
        Shortest string.
    seed : int | None, optional
        Generator seed; the same seed gives the same file.
    output : Path | None, optional
        Destination file (defaults to stdout).

    """
    config = RunConfig(seed=seed, output=output)
    inst = random_instance(
        seeded_rng(config.seed),
        k=k,
        alphabet_size=alphabet_size,
        max_len=max_len,
        min_len=min_len,
    )
    write_output(render_strings(inst), config.output)
    return 0


@app.command(name="random-cnf")
def random_cnf_cmd(
    *,
    variables: int = 5,
    clauses: int = 5,
    seed: int | None = None,
    output: Path | None = None,
) -> int:
    """Write a seeded random 3-CNF formula the SAT construction accepts.

    Parameters
    ----------
    variables : int, optional
        Variable count (at least 4).
    clauses : int, optional
        Clause count (at least 2, and enough that every variable can be left
        out of some clause).
    seed : int | None, optional
        Generator seed.
    output : Path | None, optional
        Destination file (defaults to stdout).

    """
    config = RunConfig(seed=seed, output=output)
    phi = random_cnf(seeded_rng(config.seed), variables=variables, clauses=clauses)
    write_output(render_dimacs(phi), config.output)
    return 0


@app.command(name="random-hypergraph")
def random_hypergraph_cmd(
    *,
    vertices: int = 5,
    edges: int = 3,
    seed: int | None = None,
    output: Path | None = None,
) -> int:
    """Write a seeded random hypergraph with no universal vertex.

    Parameters
    ----------
    vertices : int, optional
        Vertex count (at least 2).
    edges : int, optional
        Edges to draw (at least 2); duplicates are dropped.
    seed : int | None, optional
        Generator seed.
    output : Path | None, optional
        Destination file (defaults to stdout).

    """
    config = RunConfig(seed=seed, output=output)
    h = random_hypergraph(seeded_rng(config.seed), vertices=vertices, edges=edges)
    write_output(render_hypergraph(h), config.output)
    return 0


def _fail(error: BaseException, code: int) -> int:
    sys.stderr.write(f"mcs: {error}\n")
    return code


def main(argv: list[str] | None = None) -> int:
    """Run the mcs CLI.

    Parameters
    ----------
    argv : list[str] | None, optional
        Arguments to parse instead of ``sys.argv[1:]``.

    Returns
    -------
    int
        Exit code.

    """
    configure_logging()
    try:
        result = app(argv)
        match result:
            case int():
                return result
            case _:
                return 0
    except NotAnMcsInZ as e:
        return _fail(e, EXIT_INVALID_KNOWN)
    except ReductionAssumptionError as e:
        return _fail(e, EXIT_ASSUMPTION)
    except LimitExceeded as e:
        return _fail(e, EXIT_LIMIT)
    except (ValueError, OSError) as e:
        return _fail(e, EXIT_INPUT)
    except KeyboardInterrupt:
        sys.stderr.write("\n")
        return EXIT_INTERRUPTED
