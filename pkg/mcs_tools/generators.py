"""Seeded random instances: strings, 3-CNF formulas, and hypergraphs.

Every generator draws only from the ``random.Random`` it is given, so the
same seed always produces the same instance.

Examples
--------
Sample a formula the SAT construction accepts::

    import random

    from mcs_tools.generators import random_cnf

    phi = random_cnf(random.Random(7), variables=5, clauses=4)

"""

from __future__ import annotations

import string
import typing as typ

from mcs_tools.core import InstanceSet, SymbolMode
from mcs_tools.reductions.hypergraph import MIN_VERTICES, Hypergraph
from mcs_tools.reductions.sat import CLAUSE_WIDTH, Cnf3, Literal

if typ.TYPE_CHECKING:
    import random

MIN_CLAUSES = 2
MIN_EDGES = 2
MAX_ATTEMPTS = 10_000


class GenerationFailed(ValueError):
    """No valid sample was found within the attempt limit."""


def _require(value: int, minimum: int, name: str) -> None:
    if value < minimum:
        msg = f"{name} must be at least {minimum}, got {value}"
        raise ValueError(msg)


def random_instance(  # noqa: PLR0913
    rng: random.Random,
    *,
    k: int,
    alphabet_size: int,
    max_len: int,
    min_len: int = 1,
) -> InstanceSet:
    """Return ``k`` random char-mode strings over ``a, b, c, ...``.

    Raises
    ------
    ValueError
        If a size is out of range or ``min_len > max_len``.

    """
    _require(k, 1, "k")
    _require(alphabet_size, 1, "alphabet-size")
    _require(min_len, 1, "min-len")
    _require(max_len, min_len, "max-len")
    if alphabet_size > len(string.ascii_lowercase):
        msg = f"alphabet-size must be at most {len(string.ascii_lowercase)}"
        raise ValueError(msg)
    symbols = string.ascii_lowercase[:alphabet_size]
    rows = [
        rng.choices(symbols, k=rng.randint(min_len, max_len)) for _ in range(k)
    ]
    return InstanceSet.from_tokens(rows, mode=SymbolMode.CHARS)


def _random_clause(rng: random.Random, variables: int) -> list[Literal]:
    chosen = rng.sample(range(1, variables + 1), CLAUSE_WIDTH)
    return [Literal(var, positive=bool(rng.getrandbits(1))) for var in chosen]


def min_clauses(variables: int) -> int:
    """Fewest clauses that can leave every one of ``variables`` out once.

    Each clause omits ``variables - 3`` variables, so a formula with no
    variable in every clause needs ``clauses * (variables - 3) >= variables``.

    Raises
    ------
    ValueError
        If ``variables <= 3``: every clause then holds every variable.

    """
    spare = variables - CLAUSE_WIDTH
    if spare < 1:
        msg = (
            f"variables must be at least {CLAUSE_WIDTH + 1} for a formula with"
            f" no variable in every clause, got {variables}"
        )
        raise ValueError(msg)
    return max(MIN_CLAUSES, -(-variables // spare))


def random_cnf(rng: random.Random, *, variables: int, clauses: int) -> Cnf3:
    """Sample a 3-CNF formula with no variable in every clause.

    Each clause picks three distinct variables and independent signs. The
    whole formula is resampled while some variable is universal.

    Raises
    ------
    ValueError
        If ``variables < 4`` or ``clauses`` is below ``min_clauses(variables)``.
    GenerationFailed
        If no valid formula turns up within ``MAX_ATTEMPTS`` draws.

    """
    _require(clauses, min_clauses(variables), "clauses")
    for _ in range(MAX_ATTEMPTS):
        phi = Cnf3.from_literals(
            variables, (_random_clause(rng, variables) for _ in range(clauses))
        )
        if not phi.universal_variables():
            return phi
    msg = f"no formula without a universal variable in {MAX_ATTEMPTS} draws"
    raise GenerationFailed(msg)


def random_hypergraph(
    rng: random.Random, *, vertices: int, edges: int
) -> Hypergraph:
    """Sample a hypergraph ready for the binary construction.

    Each edge is a uniform nonempty subset of the vertices; duplicates are
    dropped, so the result may hold fewer than ``edges`` edges.

    Raises
    ------
    ValueError
        If ``vertices < 2`` or ``edges < 2``.
    GenerationFailed
        If no hypergraph without a universal vertex turns up within
        ``MAX_ATTEMPTS`` draws.

    """
    _require(vertices, MIN_VERTICES, "vertices")
    _require(edges, MIN_EDGES, "edges")
    population = range(1, vertices + 1)
    for _ in range(MAX_ATTEMPTS):
        drawn = (
            tuple(sorted(rng.sample(population, rng.randint(1, vertices))))
            for _ in range(edges)
        )
        h = Hypergraph.from_edges(vertices, dict.fromkeys(drawn))
        if h.is_ready:
            return h
    msg = f"no hypergraph without a universal vertex in {MAX_ATTEMPTS} draws"
    raise GenerationFailed(msg)
