"""Binary-partition MCS enumeration with bounded delay for fixed k.

The enumerator walks a tree of valid MCS prefixes. Each node holds a prefix
``P`` and the end of its greedy leftmost embedding in every string. A node
with no candidate extension is an MCS and is emitted; otherwise it branches on
every symbol that keeps ``P`` extendable to some MCS.

Candidate extensions come from the *unshiftable* tuples: for a nonempty common
subsequence ``X``, the k-tuple of positions where ``X``'s rightmost embedding
starts. They are found by a fixed-point expansion from the end sentinel
``(|S_1| + 1, ..., |S_k| + 1)``.

A symbol ``c`` extends ``P`` iff some undominated unshiftable ``u`` with symbol
``c`` lies beyond ``P``'s embedding and ``P`` is maximal in the strings cut
just before ``u``.

Examples
--------
Stream the MCSs of an instance::

    from mcs_tools.core import InstanceSet
    from mcs_tools.enumerator import iter_mcs

    inst = InstanceSet.from_tokens([list("ab"), list("ba")], mode="chars")
    [m.tokens for m in iter_mcs(inst)]  # [("a",), ("b",)]

"""

from __future__ import annotations

import dataclasses as dc
import logging
import math
import typing as typ

from mcs_tools.config import DEFAULT_TUPLE_CAP
from mcs_tools.core import (
    LimitExceeded,
    is_mcs,
    next_occurrence,
    previous_occurrence,
)

if typ.TYPE_CHECKING:
    import collections.abc as cabc

    from mcs_tools.core import InstanceSet, Seq

logger = logging.getLogger(__name__)

type PositionTuple = tuple[int, ...]


class CapacityExceeded(LimitExceeded):
    """The unshiftable index would grow beyond its configured cap."""


@dc.dataclass(frozen=True)
class Unshiftable:
    """An equal-symbol k-tuple of positions with its discovery witness.

    Attributes
    ----------
    positions : PositionTuple
        One 1-based position per string, all holding ``symbol``.
    symbol : int
        Shared symbol id.
    witness : PositionTuple
        Tuple (another entry or the end sentinel) this entry was derived from:
        each position is the rightmost ``symbol`` before the witness position.

    """

    positions: PositionTuple
    symbol: int
    witness: PositionTuple


@dc.dataclass(frozen=True)
class UnshiftableIndex:
    """All unshiftables of an instance, keyed by position tuple."""

    instance: InstanceSet
    entries: dict[PositionTuple, Unshiftable] = dc.field(hash=False)

    @property
    def sentinel(self) -> PositionTuple:
        """The end tuple ``(|S_1| + 1, ..., |S_k| + 1)``."""
        return tuple(len(s) + 1 for s in self.instance.strings)

    def __len__(self) -> int:
        """Return the number of entries."""
        return len(self.entries)

    def __iter__(self) -> cabc.Iterator[Unshiftable]:
        """Iterate entries in discovery order."""
        return iter(self.entries.values())


@dc.dataclass(frozen=True)
class PrefixState:
    """A valid MCS prefix and the greedy embedding end in each string."""

    prefix: Seq
    bounds: PositionTuple

    @classmethod
    def initial(cls, inst: InstanceSet) -> PrefixState:
        """Return the state of the empty prefix."""
        return cls(inst.encode(()), (0,) * inst.k)

    def advance(self, symbol: int, inst: InstanceSet) -> PrefixState:
        """Extend the prefix by ``symbol`` using the leftmost next occurrences.

        The caller guarantees ``symbol`` occurs after every bound.
        """
        bounds = tuple(
            typ.cast("int", next_occurrence(table, symbol, b))
            for table, b in zip(inst.occurrences, self.bounds, strict=True)
        )
        return PrefixState(self.prefix.append(symbol), bounds)


def _rightmost_before(
    inst: InstanceSet, symbol: int, limits: PositionTuple
) -> PositionTuple | None:
    found: list[int] = []
    for table, limit in zip(inst.occurrences, limits, strict=True):
        pos = previous_occurrence(table, symbol, limit)
        if pos is None:
            return None
        found.append(pos)
    return tuple(found)


def find_unshiftables(
    inst: InstanceSet, *, tuple_cap: int = DEFAULT_TUPLE_CAP
) -> UnshiftableIndex:
    """Compute every unshiftable tuple of ``inst``.

    Starting from the end sentinel, each discovered tuple ``v`` contributes,
    for every symbol, the tuple of rightmost occurrences strictly before
    ``v``. Each tuple is expanded once.

    Parameters
    ----------
    inst : InstanceSet
        Instance with at least two strings.
    tuple_cap : int, optional
        Largest number of entries allowed.

    Returns
    -------
    UnshiftableIndex
        The fixed point of the expansion.

    Raises
    ------
    CapacityExceeded
        If the index would exceed ``tuple_cap`` entries.

    """
    sentinel = tuple(len(s) + 1 for s in inst.strings)
    entries: dict[PositionTuple, Unshiftable] = {}
    pending = [sentinel]
    while pending:
        v = pending.pop()
        for symbol in range(len(inst.alphabet)):
            u = _rightmost_before(inst, symbol, v)
            if u is None or u in entries:
                continue
            if len(entries) >= tuple_cap:
                raise CapacityExceeded(
                    cap_name="tuple-cap", cap=tuple_cap, required=len(entries) + 1
                )
            entries[u] = Unshiftable(u, symbol, v)
            pending.append(u)

    bound = math.prod(len(s) for s in inst.strings)
    if len(entries) > bound:
        msg = f"unshiftable index has {len(entries)} entries, above {bound}"
        raise AssertionError(msg)
    logger.debug("unshiftables: %d entries (bound %d)", len(entries), bound)
    return UnshiftableIndex(inst, entries)


def verify_witness_chain(entry: Unshiftable, index: UnshiftableIndex) -> bool:
    """Check that ``entry`` derives from the sentinel through its witnesses.

    Every link must hold the same symbol in all strings and be the rightmost
    such occurrence before the next link.
    """
    inst = index.instance
    sentinel = index.sentinel
    current = entry
    for _ in range(len(index) + 1):
        if any(
            s.ids[p - 1] != current.symbol
            for s, p in zip(inst.strings, current.positions, strict=True)
        ):
            return False
        expected = _rightmost_before(inst, current.symbol, current.witness)
        if expected != current.positions:
            return False
        if current.witness == sentinel:
            return True
        nxt = index.entries.get(current.witness)
        if nxt is None:
            return False
        current = nxt
    return False


def _symbol_gates(state: PrefixState, inst: InstanceSet) -> list[PositionTuple]:
    """Leftmost occurrence tuple after the bounds, for every shared symbol."""
    gates: list[PositionTuple] = []
    for symbol in range(len(inst.alphabet)):
        gate: list[int] = []
        for table, b in zip(inst.occurrences, state.bounds, strict=True):
            pos = next_occurrence(table, symbol, b)
            if pos is None:
                break
            gate.append(pos)
        else:
            gates.append(tuple(gate))
    return gates


def _strictly_below(a: PositionTuple, b: PositionTuple) -> bool:
    return all(x < y for x, y in zip(a, b, strict=True))


def compute_ext(state: PrefixState, idx: UnshiftableIndex) -> list[Unshiftable]:
    """Return the undominated unshiftables beyond ``state``.

    ``u`` qualifies when it lies strictly after the bounds in every string and
    no other unshiftable lies strictly between the bounds and ``u`` in every
    string. Such a ``v`` exists exactly when some symbol's leftmost occurrence
    tuple after the bounds is strictly below ``u``.

    Parameters
    ----------
    state : PrefixState
        Current prefix and bounds.
    idx : UnshiftableIndex
        Index of the same instance.

    Returns
    -------
    list[Unshiftable]
        ``Ext_P``, ordered by symbol id then positions.

    """
    gates = _symbol_gates(state, idx.instance)
    ext = [
        u
        for u in idx
        if _strictly_below(state.bounds, u.positions)
        and not any(_strictly_below(g, u.positions) for g in gates)
    ]
    ext.sort(key=lambda u: (u.symbol, u.positions))
    return ext


def prefix_maximality_guard(
    prefix: Seq, u: PositionTuple, inst: InstanceSet
) -> bool:
    """Return True when ``prefix`` is an MCS of the strings cut before ``u``.

    Parameters
    ----------
    prefix : Seq
        Candidate prefix ``P``.
    u : PositionTuple
        Unshiftable positions; string ``i`` is cut to ``S_i[1, u_i - 1]``.
    inst : InstanceSet
        Full instance.

    Returns
    -------
    bool
        Whether ``P`` is maximal in the truncated instance.

    """
    return is_mcs(prefix, inst.truncate(u))


def _extension_symbols(
    state: PrefixState, idx: UnshiftableIndex
) -> list[int] | None:
    """Symbols that keep ``state`` on a path to an MCS; None means emit."""
    ext = compute_ext(state, idx)
    if not ext:
        return None
    inst = idx.instance
    symbols: list[int] = []
    for u in ext:
        if symbols and symbols[-1] == u.symbol:
            continue
        if prefix_maximality_guard(state.prefix, u.positions, inst):
            symbols.append(u.symbol)
    return symbols


def iter_mcs(
    inst: InstanceSet,
    *,
    tuple_cap: int = DEFAULT_TUPLE_CAP,
    index: UnshiftableIndex | None = None,
) -> cabc.Iterator[Seq]:
    """Yield every MCS of ``inst`` once, in symbol-id lexicographic order.

    Parameters
    ----------
    inst : InstanceSet
        Instance to enumerate.
    tuple_cap : int, optional
        Cap for the unshiftable index.
    index : UnshiftableIndex | None, optional
        Prebuilt index for ``inst``, shared between enumerations.

    Yields
    ------
    Seq
        Each MCS, without buffering the solution set.

    Raises
    ------
    CapacityExceeded
        If the index exceeds ``tuple_cap``.

    """
    if inst.k == 1:
        yield inst.strings[0]
        return
    idx = index if index is not None else find_unshiftables(inst, tuple_cap=tuple_cap)
    stack = [PrefixState.initial(inst)]
    while stack:
        state = stack.pop()
        symbols = _extension_symbols(state, idx)
        if symbols is None:
            yield state.prefix
            continue
        stack.extend(state.advance(c, inst) for c in reversed(symbols))


def enumerate_mcs(
    inst: InstanceSet,
    visit: cabc.Callable[[Seq], object],
    *,
    tuple_cap: int = DEFAULT_TUPLE_CAP,
) -> int:
    """Call ``visit`` once per MCS of ``inst`` and return the number of calls.

    Parameters
    ----------
    inst : InstanceSet
        Instance to enumerate.
    visit : collections.abc.Callable[[Seq], object]
        Callback run on the caller's thread; it must not re-enter the
        enumerator.
    tuple_cap : int, optional
        Cap for the unshiftable index.

    Returns
    -------
    int
        Number of MCSs visited.

    """
    count = 0
    for mcs in iter_mcs(inst, tuple_cap=tuple_cap):
        visit(mcs)
        count += 1
    return count
