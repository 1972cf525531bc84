"""Tests for mcs_tools.enumerator module."""

from __future__ import annotations

import itertools
import random
import statistics
import time
import typing as typ

import pytest

from mcs_tools.core import is_common_subsequence
from mcs_tools.enumerator import (
    CapacityExceeded,
    PrefixState,
    compute_ext,
    enumerate_mcs,
    find_unshiftables,
    iter_mcs,
    prefix_maximality_guard,
    verify_witness_chain,
)
from mcs_tools.generators import random_instance
from mcs_tools.oracle import enumerate_bruteforce

if typ.TYPE_CHECKING:
    import collections.abc as cabc

    from mcs_tools.core import InstanceSet, Seq
    from mcs_tools.enumerator import PositionTuple, UnshiftableIndex

type MakeInstance = cabc.Callable[..., InstanceSet]

DELAY_SAMPLE = 200


def _texts(seqs: cabc.Iterable[Seq]) -> list[str]:
    return ["".join(s.tokens) for s in seqs]


def _rightmost_start(x: Seq, s: Seq) -> int:
    """Start of the rightmost embedding of nonempty ``x`` in ``s``."""
    pos = len(s) + 1
    for sym in reversed(x.ids):
        pos = max(p for p in range(1, pos) if s.ids[p - 1] == sym)
    return pos


def _unshiftables_by_definition(inst: InstanceSet) -> set[PositionTuple]:
    """Rightmost-embedding start tuples of every nonempty common subsequence."""
    shortest = min(inst.strings, key=len)
    found: set[PositionTuple] = set()
    for mask in itertools.product((False, True), repeat=len(shortest)):
        ids = tuple(itertools.compress(shortest.ids, mask))
        x = inst.encode(inst.alphabet.symbols[i] for i in ids)
        if ids and is_common_subsequence(x, inst):
            found.add(tuple(_rightmost_start(x, s) for s in inst.strings))
    return found


def _ext_by_definition(
    state: PrefixState, idx: UnshiftableIndex
) -> set[PositionTuple]:
    """Pairwise filter of unshiftables beyond the bounds with nothing between."""

    def between(lo: PositionTuple, v: PositionTuple, hi: PositionTuple) -> bool:
        return all(a < b < c for a, b, c in zip(lo, v, hi, strict=True))

    beyond = [
        u.positions
        for u in idx
        if all(b < p for b, p in zip(state.bounds, u.positions, strict=True))
    ]
    return {
        u for u in beyond if not any(between(state.bounds, v, u) for v in beyond)
    }


def test_find_unshiftables_single_symbol(make_instance: MakeInstance) -> None:
    """Test the index of two copies of one symbol."""
    idx = find_unshiftables(make_instance("a", "a"))
    entries = list(idx)
    assert [e.positions for e in entries] == [(1, 1)], "one tuple expected"
    assert entries[0].witness == (2, 2), "witness should be the sentinel"
    assert idx.sentinel == (2, 2), "sentinel is one past each end"


def test_find_unshiftables_crossed_pair(make_instance: MakeInstance) -> None:
    """Test the index of ab/ba."""
    inst = make_instance("ab", "ba")
    idx = find_unshiftables(inst)
    found = {(e.positions, inst.alphabet.symbols[e.symbol]) for e in idx}
    assert found == {((1, 2), "a"), ((2, 1), "b")}, "two crossed tuples expected"


@pytest.mark.parametrize(
    "rows",
    [
        ("0101010101", "0010010101", "00101001001", "01010010010"),
        ("abcab", "bacba"),
        ("aabb", "abab", "bbaa"),
        ("abc", "xyz"),
    ],
)
def test_find_unshiftables_matches_definition(
    make_instance: MakeInstance, rows: tuple[str, ...]
) -> None:
    """Test the fixed point against rightmost starts of all common subsequences."""
    inst = make_instance(*rows)
    idx = find_unshiftables(inst)
    assert set(idx.entries) == _unshiftables_by_definition(inst), (
        "index should hold exactly the rightmost-embedding start tuples"
    )


def test_witness_chains_reach_sentinel(worked_strings: InstanceSet) -> None:
    """Test that every entry derives from the sentinel through its witnesses."""
    idx = find_unshiftables(worked_strings)
    assert len(idx) > 0, "worked strings share symbols"
    for entry in idx:
        assert verify_witness_chain(entry, idx), f"{entry} should chain to sentinel"
        assert all(
            s.ids[p - 1] == entry.symbol
            for s, p in zip(worked_strings.strings, entry.positions, strict=True)
        ), f"{entry} should hold one symbol in every string"


def test_find_unshiftables_capacity(worked_strings: InstanceSet) -> None:
    """Test that the tuple cap stops index growth."""
    with pytest.raises(CapacityExceeded) as excinfo:
        find_unshiftables(worked_strings, tuple_cap=3)
    assert excinfo.value.cap_name == "tuple-cap", "error should name the cap"
    assert excinfo.value.cap == 3, "error should report the cap"


def test_compute_ext_crossed_pair(make_instance: MakeInstance) -> None:
    """Test that neither crossed tuple dominates the other."""
    inst = make_instance("ab", "ba")
    idx = find_unshiftables(inst)
    ext = compute_ext(PrefixState.initial(inst), idx)
    assert [u.positions for u in ext] == [(1, 2), (2, 1)], (
        "both tuples should be candidates, ordered by symbol"
    )


def test_compute_ext_past_the_end(make_instance: MakeInstance) -> None:
    """Test that a state at the last positions has no candidates."""
    inst = make_instance("ab", "ab")
    idx = find_unshiftables(inst)
    state = PrefixState(inst.encode(["a", "b"]), (2, 2))
    assert compute_ext(state, idx) == [], "nothing lies beyond the bounds"


def _walk_ext(inst: InstanceSet) -> int:
    """Compare ``compute_ext`` with the pairwise scan on every reachable prefix."""
    idx = find_unshiftables(inst)
    pending = [PrefixState.initial(inst)]
    seen = 0
    while pending:
        state = pending.pop()
        ext = compute_ext(state, idx)
        assert {u.positions for u in ext} == _ext_by_definition(state, idx), (
            f"Ext mismatch at prefix {state.prefix.tokens}"
        )
        for u, v in itertools.permutations(ext, 2):
            pairs = zip(u.positions, v.positions, strict=True)
            assert not all(a < b for a, b in pairs), (
                f"{u.positions} lies below {v.positions} at {state.prefix.tokens}"
            )
        pending.extend(state.advance(c, inst) for c in {u.symbol for u in ext})
        seen += 1
    return seen


def test_compute_ext_matches_pairwise_definition(worked_strings: InstanceSet) -> None:
    """Test the gate filter against the pairwise scan along every path."""
    assert _walk_ext(worked_strings) > 6, "walk should cover more than the leaves"


@pytest.mark.parametrize("seed", range(60))
def test_compute_ext_random_antichains(seed: int) -> None:
    """Test Ext is the pairwise antichain on seeded random instances."""
    rng = random.Random(seed)
    inst = random_instance(
        rng, k=rng.randint(2, 4), alphabet_size=rng.randint(1, 4), max_len=10
    )
    assert _walk_ext(inst) >= 1, f"seed {seed}: the empty prefix is visited"


def test_prefix_state_advance(make_instance: MakeInstance) -> None:
    """Test that bounds move to the leftmost next occurrence."""
    inst = make_instance("abab", "bbaa")
    a = inst.alphabet.id_of("a")
    state = PrefixState.initial(inst).advance(a, inst)
    assert state.bounds == (1, 3), "first a in each string"
    assert state.prefix.tokens == ("a",), "prefix should grow by a"


@pytest.mark.parametrize(
    ("prefix", "bounds", "expected"),
    [("", (2, 2), True), ("", (3, 3), False), ("a", (3, 3), True)],
)
def test_prefix_maximality_guard(
    make_instance: MakeInstance,
    prefix: str,
    bounds: PositionTuple,
    *,
    expected: bool,
) -> None:
    """Test the guard on ab/ba truncated before the given tuple."""
    inst = make_instance("ab", "ba")
    result = prefix_maximality_guard(inst.encode(list(prefix)), bounds, inst)
    assert result is expected, f"guard({prefix!r}, {bounds}) should be {expected}"


@pytest.mark.parametrize(
    ("rows", "expected"),
    [
        (("ab", "ba"), ["a", "b"]),
        (("abc", "abc"), ["abc"]),
        (("abc",), ["abc"]),
        (("xy", "zw"), [""]),
        (("abc", "acb"), ["ab", "ac"]),
    ],
)
def test_iter_mcs_small(
    make_instance: MakeInstance, rows: tuple[str, ...], expected: list[str]
) -> None:
    """Test the enumerator on hand-checked instances."""
    assert _texts(iter_mcs(make_instance(*rows))) == expected, (
        f"MCSs of {rows} should be {expected}"
    )


def test_iter_mcs_worked(worked_strings: InstanceSet, worked_mcs: list[str]) -> None:
    """Test that the worked strings yield their six MCSs in order."""
    assert _texts(iter_mcs(worked_strings)) == worked_mcs, (
        "enumerator should stream the six MCSs lexicographically"
    )


def test_iter_mcs_shares_prebuilt_index(worked_strings: InstanceSet) -> None:
    """Test that a prebuilt index gives the same stream."""
    idx = find_unshiftables(worked_strings)
    first = _texts(iter_mcs(worked_strings, index=idx))
    second = _texts(iter_mcs(worked_strings, index=idx))
    assert first == second == _texts(iter_mcs(worked_strings)), (
        "sharing the index should not change the output"
    )


def test_enumerate_mcs_callback(worked_strings: InstanceSet) -> None:
    """Test that the callback sees each MCS once and the count is returned."""
    seen: list[str] = []
    total = enumerate_mcs(worked_strings, lambda m: seen.append("".join(m.tokens)))
    assert total == 6, "six MCSs expected"
    assert len(set(seen)) == len(seen) == total, "no duplicates"


def test_enumerate_mcs_propagates_capacity(worked_strings: InstanceSet) -> None:
    """Test that a tiny tuple cap surfaces from the callback form."""
    with pytest.raises(CapacityExceeded):
        enumerate_mcs(worked_strings, lambda _: None, tuple_cap=1)


@pytest.mark.parametrize("seed", range(200))
def test_enumerator_matches_oracle(seed: int) -> None:
    """Test enumerator and oracle agree on seeded random instances."""
    rng = random.Random(seed)
    inst = random_instance(
        rng, k=rng.randint(2, 4), alphabet_size=rng.randint(1, 4), max_len=12
    )
    streamed = list(iter_mcs(inst))
    assert len(set(streamed)) == len(streamed), f"seed {seed}: duplicate emission"
    assert set(streamed) == set(enumerate_bruteforce(inst)), (
        f"seed {seed}: enumerator and oracle disagree"
    )


@pytest.mark.slow
@pytest.mark.timeout(180)
def test_delay_does_not_grow_with_output() -> None:
    """Test late gaps between emissions stay near early ones on two long strings."""
    rng = random.Random(2024)
    inst = random_instance(rng, k=2, alphabet_size=3, max_len=200, min_len=200)
    idx = find_unshiftables(inst)
    gaps: list[float] = []
    last = time.perf_counter()
    for _ in itertools.islice(iter_mcs(inst, index=idx), DELAY_SAMPLE):
        now = time.perf_counter()
        gaps.append(now - last)
        last = now
    assert len(gaps) >= 50, "two long strings should have many MCSs"
    half = len(gaps) // 2
    early = statistics.median(gaps[1:half])
    late = statistics.median(gaps[half:])
    assert late <= 20 * early + 0.05, f"late delay {late:.4f}s vs early {early:.4f}s"
