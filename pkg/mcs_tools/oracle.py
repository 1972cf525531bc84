"""Brute-force MCS enumeration over the shortest string.

Every common subsequence is a subsequence of the shortest input string, so
trying all ``2**l`` keep/drop masks of that string and keeping the maximal
results yields exactly the MCS set. The cost is exponential only in ``l``,
which makes this the ground truth for the delay enumerator on small inputs.

Examples
--------
Enumerate the MCSs of two short strings::

    from mcs_tools.core import InstanceSet
    from mcs_tools.oracle import enumerate_bruteforce

    inst = InstanceSet.from_tokens([list("abc"), list("acb")], mode="chars")
    [m.tokens for m in enumerate_bruteforce(inst)]  # [("a", "b"), ("a", "c")]

"""

from __future__ import annotations

import dataclasses as dc
import itertools
import logging
import typing as typ

from mcs_tools.config import DEFAULT_MASK_CAP
from mcs_tools.core import InstanceSet, LimitExceeded, Seq, is_mcs, prune_alphabet

if typ.TYPE_CHECKING:
    import collections.abc as cabc

logger = logging.getLogger(__name__)


class BudgetExceeded(LimitExceeded):
    """An exhaustive search would need more iterations than allowed."""


@dc.dataclass(frozen=True)
class McsSet:
    """Deduplicated MCSs of one instance, sorted by symbol-id sequence."""

    members: tuple[Seq, ...]

    @classmethod
    def from_iterable(cls, seqs: cabc.Iterable[Seq]) -> McsSet:
        """Deduplicate and sort ``seqs``."""
        return cls(tuple(sorted(set(seqs), key=lambda s: s.ids)))

    @property
    def cardinality(self) -> int:
        """Number of members."""
        return len(self.members)

    def __len__(self) -> int:
        """Return the number of members."""
        return len(self.members)

    def __iter__(self) -> cabc.Iterator[Seq]:
        """Iterate members in order."""
        return iter(self.members)

    def __contains__(self, item: object) -> bool:
        """Return True when ``item`` is a member."""
        return item in self.members


def check_budget(required: int, cap: int, *, cap_name: str) -> None:
    """Raise ``BudgetExceeded`` when ``required`` exceeds ``cap``."""
    if required > cap:
        raise BudgetExceeded(cap_name=cap_name, cap=cap, required=required)


def enumerate_bruteforce(
    inst: InstanceSet, *, mask_cap: int = DEFAULT_MASK_CAP
) -> McsSet:
    """Return every MCS of ``inst`` by exhaustive mask search.

    Parameters
    ----------
    inst : InstanceSet
        Instance to solve.
    mask_cap : int, optional
        Largest number of masks to try.

    Returns
    -------
    McsSet
        All MCSs, over ``inst``'s alphabet.

    Raises
    ------
    BudgetExceeded
        If ``2**l`` of the pruned instance exceeds ``mask_cap``.

    """
    pruned = prune_alphabet(inst)
    shortest = min(pruned.strings, key=len)
    check_budget(2 ** len(shortest), mask_cap, cap_name="mask-cap")

    candidates = {
        tuple(itertools.compress(shortest.ids, mask))
        for mask in itertools.product((False, True), repeat=len(shortest))
    }
    logger.debug(
        "oracle: %d masks, %d distinct subsequences",
        2 ** len(shortest),
        len(candidates),
    )
    found = (
        Seq(pruned.alphabet, ids).recode(inst.alphabet)
        for ids in candidates
        if is_mcs(Seq(pruned.alphabet, ids), pruned)
    )
    return McsSet.from_iterable(found)
