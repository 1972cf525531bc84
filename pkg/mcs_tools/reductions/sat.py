"""3-SAT to Another-MCS construction, witness decoding, and SAT oracle.

For a 3-CNF formula over ``x1..xv`` the construction builds one string
``S_0 = x1 !x1 x2 !x2 ... xv !xv`` plus one string per clause,

    S_i = R^(a-1) l1 R^(b-a) l2 R^(c-b) l3 R^(v-c),  R = xv !xv ... x1 !x1

for a clause ``l1 or l2 or l3`` over variables ``a < b < c``. Deleting the
block of variable ``j`` from ``S_0`` gives ``Z_j``; every ``Z_j`` is an MCS,
and another MCS exists exactly when the formula is satisfiable.

Examples
--------
Build the instance for a formula read from DIMACS::

    from mcs_tools.formats import parse_dimacs
    from mcs_tools.reductions.sat import build_sat_instance

    phi = parse_dimacs(text)
    reduction = build_sat_instance(phi)
    reduction.strings.k  # m + 1

"""

from __future__ import annotations

import dataclasses as dc
import itertools
import logging
import typing as typ

from mcs_tools.analysis import another_mcs
from mcs_tools.config import DEFAULT_TUPLE_CAP, DEFAULT_VARIABLE_CAP
from mcs_tools.core import (
    Alphabet,
    AlphabetMismatchError,
    InstanceSet,
    SymbolMode,
    is_common_subsequence,
    is_mcs,
)
from mcs_tools.oracle import check_budget

if typ.TYPE_CHECKING:
    import collections.abc as cabc

    from mcs_tools.core import Seq

logger = logging.getLogger(__name__)

type Assignment = tuple[bool, ...]

CLAUSE_WIDTH = 3


class ReductionAssumptionError(Exception):
    """Input violates an assumption a reduction relies on."""


class InvalidFormula(ReductionAssumptionError):
    """A formula cannot be fed to the SAT construction.

    Attributes
    ----------
    clause : int | None
        1-based index of the offending clause, when one is to blame.

    """

    def __init__(self, message: str, *, clause: int | None = None) -> None:
        """Create the error, optionally naming the clause."""
        self.clause = clause
        prefix = f"clause {clause}: " if clause is not None else ""
        super().__init__(prefix + message)


class NotAWitness(ValueError):
    """A string cannot be decoded into a satisfying assignment."""


@dc.dataclass(frozen=True, order=True)
class Literal:
    """A variable index with its sign."""

    var: int
    positive: bool = True

    @property
    def token(self) -> str:
        """Token spelling: ``xJ`` or ``!xJ``."""
        return f"x{self.var}" if self.positive else f"!x{self.var}"

    @property
    def negated(self) -> Literal:
        """The complementary literal."""
        return Literal(self.var, positive=not self.positive)

    @classmethod
    def from_dimacs(cls, value: int) -> Literal:
        """Convert a signed DIMACS integer."""
        return cls(abs(value), positive=value > 0)

    def to_dimacs(self) -> int:
        """Return the signed DIMACS integer."""
        return self.var if self.positive else -self.var


type Clause = tuple[Literal, Literal, Literal]


@dc.dataclass(frozen=True)
class Cnf3:
    """A 3-CNF formula with each clause sorted by variable index.

    Construction rejects clauses that repeat a variable (which covers
    complementary pairs) and variables outside ``1..v``.

    """

    v: int
    clauses: tuple[Clause, ...]

    @classmethod
    def from_literals(
        cls, v: int, clauses: cabc.Iterable[cabc.Iterable[Literal]]
    ) -> Cnf3:
        """Validate and sort clauses.

        Raises
        ------
        InvalidFormula
            If a clause does not hold three distinct in-range variables.

        """
        built: list[Clause] = []
        for number, raw in enumerate(clauses, start=1):
            lits = sorted(raw)
            if len(lits) != CLAUSE_WIDTH:
                msg = f"expected {CLAUSE_WIDTH} literals, got {len(lits)}"
                raise InvalidFormula(msg, clause=number)
            variables = [lit.var for lit in lits]
            if len(set(variables)) != CLAUSE_WIDTH:
                msg = "repeated or complementary variable"
                raise InvalidFormula(msg, clause=number)
            if any(not 1 <= var <= v for var in variables):
                msg = f"variable outside 1..{v}"
                raise InvalidFormula(msg, clause=number)
            built.append((lits[0], lits[1], lits[2]))
        return cls(v, tuple(built))

    @property
    def m(self) -> int:
        """Number of clauses."""
        return len(self.clauses)

    def universal_variables(self) -> list[int]:
        """Variables occurring in every clause (all of them when m = 0)."""
        return [
            var
            for var in range(1, self.v + 1)
            if all(any(lit.var == var for lit in c) for c in self.clauses)
        ]

    def universal_literals(self) -> list[Literal]:
        """Literals occurring, with the same sign, in every clause."""
        candidates = {
            Literal(var, positive=sign)
            for var in range(1, self.v + 1)
            for sign in (True, False)
        }
        for clause in self.clauses:
            candidates.intersection_update(clause)
        return sorted(candidates)


@dc.dataclass(frozen=True)
class SatMcsInstance:
    """The strings ``S_0..S_m`` and the known MCSs ``Z_1..Z_v`` of a formula."""

    strings: InstanceSet
    known_mcs: tuple[Seq, ...]


def sat_alphabet(v: int) -> Alphabet:
    """Return the alphabet ``x1, !x1, ..., xv, !xv``."""
    return Alphabet.from_symbols(_blocks(v))


def _block(var: int) -> list[str]:
    return [Literal(var).token, Literal(var, positive=False).token]


def _blocks(v: int, *, skip: int = 0) -> list[str]:
    """Tokens of ``S_0`` with the block of variable ``skip`` left out."""
    return [t for var in range(1, v + 1) if var != skip for t in _block(var)]


def clause_string(clause: Clause, v: int) -> list[str]:
    """Return the tokens of the string encoding ``clause``."""
    r_block = [t for var in range(v, 0, -1) for t in _block(var)]
    a, b, c = (lit.var for lit in clause)
    tokens: list[str] = []
    for repeats, lit in zip((a - 1, b - a, c - b), clause, strict=True):
        tokens.extend(r_block * repeats)
        tokens.append(lit.token)
    tokens.extend(r_block * (v - c))
    return tokens


def build_sat_instance(phi: Cnf3) -> SatMcsInstance:
    """Construct the Another-MCS instance of ``phi``.

    Parameters
    ----------
    phi : Cnf3
        Formula with no literal in every clause. A variable may still occur
        in every clause with mixed signs.

    Returns
    -------
    SatMcsInstance
        ``S_0..S_m`` in token mode and the ``v`` strings ``Z_j``.

    Raises
    ------
    InvalidFormula
        If some literal occurs in every clause.

    """
    if universal := phi.universal_literals():
        msg = f"literal {universal[0].token} occurs in every clause"
        raise InvalidFormula(msg)
    if mixed := phi.universal_variables():
        logger.info("variable x%d occurs in every clause with mixed signs", mixed[0])
    alphabet = sat_alphabet(phi.v)
    rows = [_blocks(phi.v), *(clause_string(c, phi.v) for c in phi.clauses)]
    strings = InstanceSet.from_tokens(
        rows, mode=SymbolMode.TOKENS, alphabet=alphabet
    )
    known = tuple(
        strings.encode(_blocks(phi.v, skip=j)) for j in range(1, phi.v + 1)
    )
    return SatMcsInstance(strings, known)


def evaluate(phi: Cnf3, assignment: cabc.Sequence[bool]) -> bool:
    """Return True when ``assignment`` satisfies ``phi``.

    ``assignment[j - 1]`` is the value of ``xj``.
    """
    return all(
        any(assignment[lit.var - 1] == lit.positive for lit in clause)
        for clause in phi.clauses
    )


def decode_assignment(
    x: Seq, phi: Cnf3, *, reduction: SatMcsInstance | None = None
) -> Assignment:
    """Read a satisfying assignment off an MCS outside ``Z``.

    Each variable keeps one literal of ``x``, the positive one when both
    appear; the variable is true iff the kept literal is positive.

    Parameters
    ----------
    x : Seq
        Common subsequence of the construction, not one of the ``Z_j``.
    phi : Cnf3
        Formula the construction was built from.
    reduction : SatMcsInstance | None, optional
        Prebuilt construction of ``phi``.

    Returns
    -------
    Assignment
        Truth value per variable, ``x1`` first.

    Raises
    ------
    NotAWitness
        If ``x`` has a symbol outside the literals of ``phi``, is in ``Z``,
        is not a common subsequence, or misses both literals of a variable.

    """
    red = reduction or build_sat_instance(phi)
    try:
        x = x.recode(red.strings.alphabet)
    except AlphabetMismatchError as exc:
        msg = f"string uses a symbol outside the formula's literals: {exc}"
        raise NotAWitness(msg) from exc
    if x in red.known_mcs:
        msg = "string is one of the known MCSs"
        raise NotAWitness(msg)
    if not is_common_subsequence(x, red.strings):
        msg = "string is not a common subsequence of the construction"
        raise NotAWitness(msg)
    present = set(x.tokens)
    assignment: list[bool] = []
    for var in range(1, phi.v + 1):
        pos, neg = _block(var)
        if pos not in present and neg not in present:
            msg = f"string has no literal of x{var}"
            raise NotAWitness(msg)
        assignment.append(pos in present)
    return tuple(assignment)


def sat_bruteforce(
    phi: Cnf3, *, variable_cap: int = DEFAULT_VARIABLE_CAP
) -> Assignment | None:
    """Return some satisfying assignment of ``phi`` by exhaustive search.

    Raises
    ------
    BudgetExceeded
        If ``phi.v`` exceeds ``variable_cap``.

    """
    check_budget(phi.v, variable_cap, cap_name="variable-cap")
    for values in itertools.product((False, True), repeat=phi.v):
        if evaluate(phi, values):
            return values
    return None


@dc.dataclass(frozen=True)
class SatReductionReport:
    """Outcome of checking the SAT construction on one formula.

    Attributes
    ----------
    known_all_maximal : bool
        Every ``Z_j`` is an MCS.
    satisfiable : bool
        The brute-force oracle found a satisfying assignment.
    witness : tuple[str, ...] | None
        MCS outside ``Z`` found by the enumerator, as tokens.
    witness_satisfies : bool | None
        Whether the decoded witness satisfies the formula.

    """

    known_all_maximal: bool
    satisfiable: bool
    witness: tuple[str, ...] | None
    witness_satisfies: bool | None

    @property
    def passed(self) -> bool:
        """True when every check agrees with the construction's claims."""
        return (
            self.known_all_maximal
            and self.satisfiable == (self.witness is not None)
            and self.witness_satisfies is not False
        )


def verify_sat_reduction(
    phi: Cnf3,
    *,
    variable_cap: int = DEFAULT_VARIABLE_CAP,
    tuple_cap: int = DEFAULT_TUPLE_CAP,
) -> SatReductionReport:
    """Check the construction of ``phi`` against brute force.

    Parameters
    ----------
    phi : Cnf3
        Formula to check.
    variable_cap : int, optional
        Cap for the SAT oracle.
    tuple_cap : int, optional
        Cap for the unshiftable index.

    Returns
    -------
    SatReductionReport
        Per-check results.

    """
    reduction = build_sat_instance(phi)
    known_ok = all(is_mcs(z, reduction.strings) for z in reduction.known_mcs)
    satisfiable = sat_bruteforce(phi, variable_cap=variable_cap) is not None
    witness = (
        another_mcs(reduction.strings, reduction.known_mcs, tuple_cap=tuple_cap)
        if known_ok
        else None
    )
    satisfies: bool | None = None
    if witness is not None:
        try:
            satisfies = evaluate(
                phi, decode_assignment(witness, phi, reduction=reduction)
            )
        except NotAWitness:
            satisfies = False
    report = SatReductionReport(
        known_all_maximal=known_ok,
        satisfiable=satisfiable,
        witness=witness.tokens if witness is not None else None,
        witness_satisfies=satisfies,
    )
    logger.debug("sat reduction report: %s", report)
    return report
