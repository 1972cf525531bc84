"""Alphabet, sequence, and subsequence primitives for mcs-tools.

Every other module works on an ``InstanceSet``: an ordered collection of
``Seq`` values sharing one interned ``Alphabet``. Symbols are opaque tokens
(``x1``, ``!x1``, ``0``) mapped to dense integer ids, so the algorithms only
ever compare small integers.

Examples
--------
Build an instance and test a candidate::

    from mcs_tools.core import InstanceSet, is_mcs

    inst = InstanceSet.from_tokens([list("abc"), list("acb")], mode="chars")
    is_mcs(inst.encode(["a", "b"]), inst)  # True

"""

from __future__ import annotations

import bisect
import dataclasses as dc
import enum
import functools
import typing as typ

if typ.TYPE_CHECKING:
    import collections.abc as cabc

type OccurrenceTable = dict[int, tuple[int, ...]]


class SymbolMode(enum.StrEnum):
    """How a strings file splits a line into symbols."""

    TOKENS = "tokens"
    CHARS = "chars"


class AlphabetMismatchError(ValueError):
    """A sequence was used with an instance over a different alphabet.

    Attributes
    ----------
    token : str | None
        Offending token when the mismatch came from encoding text.

    """

    def __init__(self, message: str, *, token: str | None = None) -> None:
        """Create the error with an optional offending token."""
        self.token = token
        super().__init__(message)


class LimitExceeded(RuntimeError):
    """A configured iteration or size cap would be exceeded.

    Attributes
    ----------
    cap_name : str
        Name of the cap, as spelled on the command line.
    cap : int
        Configured limit.
    required : int
        Amount the operation needed.

    """

    def __init__(self, *, cap_name: str, cap: int, required: int) -> None:
        """Create the error with structured cap details."""
        self.cap_name = cap_name
        self.cap = cap
        self.required = required
        msg = f"{cap_name} exceeded: needs {required}, cap is {cap}"
        super().__init__(msg)


@dc.dataclass(frozen=True)
class Alphabet:
    """Ordered, duplicate-free symbol table.

    Ids are ``0..len(symbols) - 1`` in the order symbols were first seen.

    """

    symbols: tuple[str, ...]
    lookup: dict[str, int] = dc.field(compare=False, hash=False, repr=False)

    @classmethod
    def from_symbols(cls, symbols: cabc.Iterable[str]) -> Alphabet:
        """Intern symbols in first-seen order, dropping repeats.

        Parameters
        ----------
        symbols : collections.abc.Iterable[str]
            Tokens in the order they should receive ids.

        Returns
        -------
        Alphabet
            Alphabet with contiguous ids.

        """
        ordered = tuple(dict.fromkeys(symbols))
        return cls(ordered, {s: i for i, s in enumerate(ordered)})

    def __len__(self) -> int:
        """Return the number of symbols."""
        return len(self.symbols)

    def id_of(self, token: str) -> int:
        """Return the id of ``token``.

        Raises
        ------
        AlphabetMismatchError
            If the token is not part of the alphabet.

        """
        try:
            return self.lookup[token]
        except KeyError:
            msg = f"unknown symbol {token!r}"
            raise AlphabetMismatchError(msg, token=token) from None


@dc.dataclass(frozen=True)
class Seq:
    """A string over an ``Alphabet``, stored as symbol ids."""

    alphabet: Alphabet
    ids: tuple[int, ...]

    def __len__(self) -> int:
        """Return the string length."""
        return len(self.ids)

    def __iter__(self) -> cabc.Iterator[int]:
        """Iterate over symbol ids."""
        return iter(self.ids)

    @property
    def tokens(self) -> tuple[str, ...]:
        """Symbols of the string as tokens."""
        return tuple(self.alphabet.symbols[i] for i in self.ids)

    def append(self, symbol: int) -> Seq:
        """Return this string followed by ``symbol``."""
        return Seq(self.alphabet, (*self.ids, symbol))

    def prefix(self, end: int) -> Seq:
        """Return the first ``end`` symbols."""
        return Seq(self.alphabet, self.ids[:end])

    def recode(self, alphabet: Alphabet) -> Seq:
        """Re-express the string over another alphabet containing its symbols."""
        if alphabet == self.alphabet:
            return self
        return Seq(alphabet, tuple(alphabet.id_of(t) for t in self.tokens))


@dc.dataclass(frozen=True)
class Arrangement:
    """Strictly increasing 1-based host positions embedding a string."""

    positions: tuple[int, ...]


@dc.dataclass(frozen=True)
class InstanceSet:
    """The k input strings of an MCS problem.

    Attributes
    ----------
    alphabet : Alphabet
        Shared symbol table.
    strings : tuple[Seq, ...]
        ``S_1 .. S_k`` in input order.
    mode : SymbolMode
        How the strings are rendered back to text.

    """

    alphabet: Alphabet
    strings: tuple[Seq, ...]
    mode: SymbolMode = SymbolMode.TOKENS

    def __post_init__(self) -> None:
        """Check the instance is nonempty and single-alphabet."""
        if not self.strings:
            msg = "an instance needs at least one string"
            raise ValueError(msg)
        for s in self.strings:
            _require_alphabet(s, self.alphabet)

    @classmethod
    def from_tokens(
        cls,
        rows: cabc.Sequence[cabc.Sequence[str]],
        *,
        mode: SymbolMode | str = SymbolMode.TOKENS,
        alphabet: Alphabet | None = None,
    ) -> InstanceSet:
        """Build an instance from token rows.

        Parameters
        ----------
        rows : collections.abc.Sequence[collections.abc.Sequence[str]]
            One token sequence per input string.
        mode : SymbolMode | str, optional
            Rendering mode for the instance.
        alphabet : Alphabet | None, optional
            Fixed alphabet; when omitted, symbols are interned in order of
            first appearance.

        Returns
        -------
        InstanceSet
            The interned instance.

        """
        alpha = alphabet or Alphabet.from_symbols(t for row in rows for t in row)
        strings = tuple(
            Seq(alpha, tuple(alpha.id_of(t) for t in row)) for row in rows
        )
        return cls(alpha, strings, SymbolMode(mode))

    @property
    def k(self) -> int:
        """Number of strings."""
        return len(self.strings)

    @property
    def n(self) -> int:
        """Length of the longest string."""
        return max(len(s) for s in self.strings)

    @property
    def total_size(self) -> int:
        """Sum of the string lengths."""
        return sum(len(s) for s in self.strings)

    @property
    def min_len(self) -> int:
        """Length of the shortest string."""
        return min(len(s) for s in self.strings)

    @functools.cached_property
    def occurrences(self) -> tuple[OccurrenceTable, ...]:
        """Per string, the sorted 1-based positions of every symbol."""
        return tuple(occurrence_table(s) for s in self.strings)

    def encode(self, tokens: cabc.Iterable[str]) -> Seq:
        """Intern a token sequence against this instance's alphabet."""
        return Seq(self.alphabet, tuple(self.alphabet.id_of(t) for t in tokens))

    def truncate(self, bounds: cabc.Sequence[int]) -> InstanceSet:
        """Return the instance of prefixes ``S_i[1, bounds[i] - 1]``."""
        strings = tuple(
            s.prefix(b - 1) for s, b in zip(self.strings, bounds, strict=True)
        )
        return InstanceSet(self.alphabet, strings, self.mode)


def occurrence_table(s: Seq) -> OccurrenceTable:
    """Map each symbol of ``s`` to its sorted 1-based positions."""
    table: dict[int, list[int]] = {}
    for pos, sym in enumerate(s.ids, start=1):
        table.setdefault(sym, []).append(pos)
    return {sym: tuple(positions) for sym, positions in table.items()}


def next_occurrence(table: OccurrenceTable, symbol: int, after: int) -> int | None:
    """Return the leftmost position of ``symbol`` strictly after ``after``."""
    occ = table.get(symbol, ())
    i = bisect.bisect_right(occ, after)
    return occ[i] if i < len(occ) else None


def previous_occurrence(
    table: OccurrenceTable, symbol: int, before: int
) -> int | None:
    """Return the rightmost position of ``symbol`` strictly before ``before``."""
    occ = table.get(symbol, ())
    i = bisect.bisect_left(occ, before)
    return occ[i - 1] if i > 0 else None


def _require_alphabet(x: Seq, alphabet: Alphabet) -> None:
    if x.alphabet != alphabet:
        msg = "sequence and host use different alphabets"
        raise AlphabetMismatchError(msg)


def is_subsequence(x: Seq, s: Seq) -> Arrangement | None:
    """Embed ``x`` in ``s`` greedily from the left.

    Parameters
    ----------
    x : Seq
        Candidate subsequence.
    s : Seq
        Host string.

    Returns
    -------
    Arrangement | None
        The leftmost arrangement, which is position-wise minimal among all
        arrangements, or None when ``x`` is not a subsequence of ``s``.

    Raises
    ------
    AlphabetMismatchError
        If ``x`` and ``s`` use different alphabets.

    """
    _require_alphabet(x, s.alphabet)
    positions: list[int] = []
    it = iter(enumerate(s.ids, start=1))
    for sym in x.ids:
        for pos, host_sym in it:
            if host_sym == sym:
                positions.append(pos)
                break
        else:
            return None
    return Arrangement(tuple(positions))


def is_common_subsequence(x: Seq, inst: InstanceSet) -> bool:
    """Return True when ``x`` is a subsequence of every string of ``inst``."""
    return all(is_subsequence(x, s) is not None for s in inst.strings)


def _forward_ends(x: Seq, table: OccurrenceTable) -> list[int] | None:
    """Greedy leftmost end position of every prefix of ``x`` (0 for ε)."""
    ends = [0]
    for sym in x.ids:
        pos = next_occurrence(table, sym, ends[-1])
        if pos is None:
            return None
        ends.append(pos)
    return ends


def _backward_starts(x: Seq, table: OccurrenceTable, length: int) -> list[int]:
    """Greedy rightmost start position of every suffix of ``x``.

    Entry ``p`` belongs to ``x[p:]``; the empty suffix starts at ``length + 1``.
    Only called once ``x`` is known to embed, so every lookup succeeds.
    """
    starts = [length + 1] * (len(x) + 1)
    for p in range(len(x) - 1, -1, -1):
        pos = previous_occurrence(table, x.ids[p], starts[p + 1])
        starts[p] = typ.cast("int", pos)
    return starts


def is_mcs(x: Seq, inst: InstanceSet) -> bool:
    """Return True when ``x`` is a maximal common subsequence of ``inst``.

    ``x`` is maximal iff it is common and no single-symbol insertion is. An
    insertion of ``c`` at gap ``p`` is common exactly when every string has an
    occurrence of ``c`` strictly between the leftmost end of ``x[:p]`` and the
    rightmost start of ``x[p:]``.

    Parameters
    ----------
    x : Seq
        Candidate string.
    inst : InstanceSet
        Instance to test against.

    Returns
    -------
    bool
        True if ``x`` is an MCS of ``inst``.

    """
    _require_alphabet(x, inst.alphabet)
    windows: list[tuple[list[int], list[int]]] = []
    for s, table in zip(inst.strings, inst.occurrences, strict=True):
        ends = _forward_ends(x, table)
        if ends is None:
            return False
        windows.append((ends, _backward_starts(x, table, len(s))))

    for p in range(len(x) + 1):
        for c in range(len(inst.alphabet)):
            if all(
                _occurs_between(table, c, ends[p], starts[p])
                for table, (ends, starts) in zip(
                    inst.occurrences, windows, strict=True
                )
            ):
                return False
    return True


def _occurs_between(table: OccurrenceTable, symbol: int, lo: int, hi: int) -> bool:
    pos = next_occurrence(table, symbol, lo)
    return pos is not None and pos < hi


def prune_alphabet(inst: InstanceSet) -> InstanceSet:
    """Delete every symbol that does not occur in all strings.

    Such symbols cannot appear in any common subsequence, so the set of MCSs
    is unchanged. The result uses the sub-alphabet of shared symbols, in the
    original id order.

    Parameters
    ----------
    inst : InstanceSet
        Instance to prune.

    Returns
    -------
    InstanceSet
        Pruned instance; identical content when nothing is removed.

    """
    shared = set.intersection(*(set(s.ids) for s in inst.strings))
    if len(shared) == len(inst.alphabet):
        return inst
    kept = [sym for i, sym in enumerate(inst.alphabet.symbols) if i in shared]
    alphabet = Alphabet.from_symbols(kept)
    rows = [[t for t in s.tokens if t in alphabet.lookup] for s in inst.strings]
    return InstanceSet.from_tokens(rows, mode=inst.mode, alphabet=alphabet)
