"""Counting, assessment, and another-solution queries over MCS sets.

All three run on the lazy enumerator stream, so they stop as soon as the
answer is known: assessment after ``z + 1`` solutions, another-MCS after
``|known| + 1``.

Examples
--------
Decide whether an instance has more than five MCSs::

    from mcs_tools.analysis import assess_mcs

    outcome = assess_mcs(inst, 5)
    outcome.verdict

"""

from __future__ import annotations

import dataclasses as dc
import logging
import typing as typ

from mcs_tools.config import DEFAULT_TUPLE_CAP
from mcs_tools.core import is_mcs
from mcs_tools.enumerator import iter_mcs

if typ.TYPE_CHECKING:
    import collections.abc as cabc

    from mcs_tools.core import InstanceSet, Seq

logger = logging.getLogger(__name__)


class NotAnMcsInZ(ValueError):
    """A member of the known set is not an MCS of the instance.

    Attributes
    ----------
    member : tuple[str, ...]
        Tokens of the offending member.

    """

    def __init__(self, member: cabc.Sequence[str]) -> None:
        """Create the error for ``member``."""
        self.member = tuple(member)
        msg = f"known string is not an MCS: {' '.join(self.member) or '(empty)'}"
        super().__init__(msg)


@dc.dataclass(frozen=True)
class AssessOutcome:
    """Result of comparing the MCS count with a threshold.

    Attributes
    ----------
    verdict : bool
        True when the instance has more than ``z`` MCSs.
    solutions_seen : int
        Solutions drawn from the enumerator before deciding.
    exhausted : bool
        True when the enumerator ran to completion.

    """

    verdict: bool
    solutions_seen: int
    exhausted: bool


def count_mcs(inst: InstanceSet, *, tuple_cap: int = DEFAULT_TUPLE_CAP) -> int:
    """Return the exact number of MCSs of ``inst``.

    Solutions are counted as they stream past and never stored.
    """
    return sum(1 for _ in iter_mcs(inst, tuple_cap=tuple_cap))


def assess_mcs(
    inst: InstanceSet, z: int, *, tuple_cap: int = DEFAULT_TUPLE_CAP
) -> AssessOutcome:
    """Decide whether ``inst`` has more than ``z`` MCSs.

    Parameters
    ----------
    inst : InstanceSet
        Instance to assess.
    z : int
        Non-negative threshold.
    tuple_cap : int, optional
        Cap for the unshiftable index.

    Returns
    -------
    AssessOutcome
        Verdict after at most ``z + 1`` solutions.

    Raises
    ------
    ValueError
        If ``z`` is negative.

    """
    if z < 0:
        msg = f"threshold must be non-negative, got {z}"
        raise ValueError(msg)
    seen = 0
    for _ in iter_mcs(inst, tuple_cap=tuple_cap):
        seen += 1
        if seen > z:
            return AssessOutcome(verdict=True, solutions_seen=seen, exhausted=False)
    return AssessOutcome(verdict=False, solutions_seen=seen, exhausted=True)


def count_by_assessment(
    inst: InstanceSet, upper: int, *, tuple_cap: int = DEFAULT_TUPLE_CAP
) -> int:
    """Recover the MCS count by binary search over assessment thresholds.

    Parameters
    ----------
    inst : InstanceSet
        Instance to count.
    upper : int
        Known upper bound on the count; ``2**n + 1`` suffices for the binary
        instance built from an ``n``-vertex hypergraph.
    tuple_cap : int, optional
        Cap for the unshiftable index.

    Returns
    -------
    int
        The number of MCSs, using about ``log2(upper)`` assessment calls.

    """
    lo, hi = 0, upper
    while lo < hi:
        mid = (lo + hi) // 2
        if assess_mcs(inst, mid, tuple_cap=tuple_cap).verdict:
            lo = mid + 1
        else:
            hi = mid
    return lo


def another_mcs(
    inst: InstanceSet,
    known: cabc.Iterable[Seq],
    *,
    tuple_cap: int = DEFAULT_TUPLE_CAP,
) -> Seq | None:
    """Return an MCS of ``inst`` outside ``known``, or None if there is none.

    Parameters
    ----------
    inst : InstanceSet
        Instance to search.
    known : collections.abc.Iterable[Seq]
        MCSs already found; duplicates are ignored.
    tuple_cap : int, optional
        Cap for the unshiftable index.

    Returns
    -------
    Seq | None
        The first enumerated MCS not in ``known``. At most ``|known| + 1``
        solutions are inspected.

    Raises
    ------
    NotAnMcsInZ
        If a member of ``known`` is not an MCS of ``inst``.

    """
    known_ids: set[tuple[int, ...]] = set()
    for member in known:
        if member.alphabet != inst.alphabet or not is_mcs(member, inst):
            raise NotAnMcsInZ(member.tokens)
        known_ids.add(member.ids)

    skipped = 0
    for mcs in iter_mcs(inst, tuple_cap=tuple_cap):
        if mcs.ids not in known_ids:
            logger.debug("another-mcs: found after skipping %d known", skipped)
            return mcs
        skipped += 1
    logger.debug("another-mcs: exhausted after %d known", skipped)
    return None
