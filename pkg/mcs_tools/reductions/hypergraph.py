"""Hypergraph MIS to binary MCS construction, the ``psi`` bijection, and oracle.

For a hypergraph on vertices ``1..n`` the construction builds
``S_0 = (01)^n`` plus one string per hyperedge ``E = {u_1 < ... < u_h}``:
``S_E = T_1 ... T_(n+h-1)`` where ``T_j`` is ``0`` when ``j = u_k + k - 1``
for some ``k`` and ``01`` otherwise. Apart from ``w = (01)^(n-1)``, the MCSs
of the result are exactly ``psi(U)`` for the maximal independent sets ``U``.

Examples
--------
Rebuild the four strings of the small worked hypergraph::

    from mcs_tools.reductions import hypergraph as hg

    h = hg.Hypergraph.from_edges(5, [[1, 2], [1, 3, 4], [3, 4, 5]])
    [s.tokens for s in hg.build_hypergraph_instance(h).strings.strings]

"""

from __future__ import annotations

import dataclasses as dc
import itertools
import logging
import typing as typ

from mcs_tools.config import DEFAULT_MASK_CAP, DEFAULT_TUPLE_CAP, DEFAULT_VERTEX_CAP
from mcs_tools.core import Alphabet, InstanceSet, Seq, SymbolMode
from mcs_tools.enumerator import iter_mcs
from mcs_tools.oracle import check_budget, enumerate_bruteforce
from mcs_tools.reductions.sat import ReductionAssumptionError

if typ.TYPE_CHECKING:
    import collections.abc as cabc

logger = logging.getLogger(__name__)

type VertexSet = frozenset[int]

BINARY_ALPHABET = Alphabet.from_symbols(("0", "1"))
_ZERO, _ONE = 0, 1
_ZERO_BLOCK = (_ZERO,)
_ONE_BLOCK = (_ZERO, _ONE)
MIN_VERTICES = 2


class UniversalVertex(ReductionAssumptionError):
    """Some vertex belongs to every hyperedge."""

    def __init__(self, vertex: int) -> None:
        """Create the error naming ``vertex``."""
        self.vertex = vertex
        super().__init__(f"vertex {vertex} belongs to every hyperedge")


class TooFewVertices(ReductionAssumptionError):
    """The construction needs at least two vertices."""

    def __init__(self, n: int) -> None:
        """Create the error for an ``n``-vertex hypergraph."""
        self.n = n
        super().__init__(f"need at least {MIN_VERTICES} vertices, got {n}")


@dc.dataclass(frozen=True)
class Hypergraph:
    """Vertices ``1..n`` and a list of distinct, nonempty, sorted hyperedges."""

    n: int
    edges: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(
        cls, n: int, edges: cabc.Iterable[cabc.Iterable[int]]
    ) -> Hypergraph:
        """Validate and normalise hyperedges.

        Parameters
        ----------
        n : int
            Vertex count.
        edges : collections.abc.Iterable[collections.abc.Iterable[int]]
            Vertex ids per hyperedge, in any order.

        Returns
        -------
        Hypergraph
            Hypergraph with each edge sorted and deduplicated.

        Raises
        ------
        ValueError
            If ``n`` is negative, or an edge is empty, repeated, or names a
            vertex outside ``1..n``.

        """
        if n < 0:
            msg = f"vertex count must be non-negative, got {n}"
            raise ValueError(msg)
        built: list[tuple[int, ...]] = []
        for number, raw in enumerate(edges, start=1):
            edge = tuple(sorted(set(raw)))
            if not edge:
                msg = f"edge {number}: empty hyperedge"
                raise ValueError(msg)
            if edge[0] < 1 or edge[-1] > n:
                msg = f"edge {number}: vertex outside 1..{n}"
                raise ValueError(msg)
            if edge in built:
                msg = f"edge {number}: duplicate hyperedge"
                raise ValueError(msg)
            built.append(edge)
        return cls(n, tuple(built))

    @property
    def m(self) -> int:
        """Number of hyperedges."""
        return len(self.edges)

    def universal_vertices(self) -> list[int]:
        """Vertices lying in every hyperedge (all of them when m = 0)."""
        return [
            v for v in range(1, self.n + 1) if all(v in e for e in self.edges)
        ]

    def check_ready(self) -> None:
        """Raise unless the hypergraph can be fed to the construction.

        Raises
        ------
        TooFewVertices
            If ``n < 2``.
        UniversalVertex
            If some vertex lies in every hyperedge.

        """
        if self.n < MIN_VERTICES:
            raise TooFewVertices(self.n)
        if universal := self.universal_vertices():
            raise UniversalVertex(universal[0])

    @property
    def is_ready(self) -> bool:
        """True when ``check_ready`` passes."""
        return self.n >= MIN_VERTICES and not self.universal_vertices()


@dc.dataclass(frozen=True)
class BinaryMcsInstance:
    """The binary strings built from a hypergraph."""

    strings: InstanceSet
    hypergraph: Hypergraph

    @property
    def n(self) -> int:
        """Vertex count of the source hypergraph."""
        return self.hypergraph.n

    @property
    def w(self) -> Seq:
        """The extra MCS ``(01)^(n-1)`` with no vertex-set counterpart."""
        return _blocks([_ONE_BLOCK] * (self.n - 1))


def _blocks(blocks: cabc.Iterable[tuple[int, ...]]) -> Seq:
    return Seq(BINARY_ALPHABET, tuple(itertools.chain.from_iterable(blocks)))


def edge_string(edge: cabc.Sequence[int], n: int) -> Seq:
    """Return ``S_E`` for one sorted hyperedge."""
    zero_at = {u + k for k, u in enumerate(edge)}
    return _blocks(
        _ZERO_BLOCK if j in zero_at else _ONE_BLOCK
        for j in range(1, n + len(edge))
    )


def build_hypergraph_instance(h: Hypergraph) -> BinaryMcsInstance:
    """Construct the binary MCS instance of ``h``.

    Raises
    ------
    TooFewVertices, UniversalVertex
        If ``h`` is not ready for the construction.

    """
    h.check_ready()
    s0 = _blocks([_ONE_BLOCK] * h.n)
    strings = (s0, *(edge_string(e, h.n) for e in h.edges))
    return BinaryMcsInstance(
        InstanceSet(BINARY_ALPHABET, strings, SymbolMode.CHARS), h
    )


def psi(u: cabc.Iterable[int], n: int) -> Seq:
    """Encode a vertex set: block ``01`` for members, ``0`` otherwise."""
    members = set(u)
    return _blocks(
        _ONE_BLOCK if i in members else _ZERO_BLOCK for i in range(1, n + 1)
    )


def psi_inverse(x: Seq) -> VertexSet | None:
    """Decode a block string back to its vertex set.

    Returns
    -------
    VertexSet | None
        Vertices whose block is ``01``, numbered by block; None when ``x``
        starts with ``1`` or contains ``11``.

    """
    ids = x.recode(BINARY_ALPHABET).ids
    members: set[int] = set()
    block = 0
    for pos, sym in enumerate(ids):
        if sym == _ZERO:
            block += 1
        elif pos == 0 or ids[pos - 1] == _ONE:
            return None
        else:
            members.add(block)
    return frozenset(members)


def forbidden_pattern(edge: cabc.Iterable[int], n: int) -> Seq:
    """Return the block string with ``01`` exactly on the edge's vertices."""
    return psi(edge, n)


def _mask(vertices: cabc.Iterable[int]) -> int:
    return sum(1 << (v - 1) for v in set(vertices))


def is_independent(u: cabc.Iterable[int], h: Hypergraph) -> bool:
    """Return True when ``u`` contains no hyperedge entirely."""
    members = set(u)
    return not any(members.issuperset(e) for e in h.edges)


def enumerate_mis_bruteforce(
    h: Hypergraph, *, vertex_cap: int = DEFAULT_VERTEX_CAP
) -> list[VertexSet]:
    """Return every maximal independent set of ``h`` by scanning all subsets.

    An independent set is maximal when adding any single outside vertex
    breaks independence.

    Raises
    ------
    BudgetExceeded
        If ``h.n`` exceeds ``vertex_cap``.

    """
    check_budget(h.n, vertex_cap, cap_name="vertex-cap")
    edge_masks = [_mask(e) for e in h.edges]

    def independent(mask: int) -> bool:
        return not any((mask & e) == e for e in edge_masks)

    found: list[VertexSet] = []
    for mask in range(1 << h.n):
        if not independent(mask):
            continue
        outside = (bit for bit in range(h.n) if not (mask >> bit) & 1)
        if any(independent(mask | 1 << bit) for bit in outside):
            continue
        found.append(frozenset(b + 1 for b in range(h.n) if (mask >> b) & 1))
    found.sort(key=sorted)
    return found


@dc.dataclass(frozen=True)
class BijectionReport:
    """Outcome of checking the construction on one hypergraph.

    Attributes
    ----------
    w_present : bool
        ``(01)^(n-1)`` is among the MCSs.
    mis_count : int
        Number of maximal independent sets.
    mcs_count : int
        Number of MCSs of the construction.
    missing : tuple[VertexSet, ...]
        Maximal independent sets whose encoding is not an MCS.
    unexpected : tuple[str, ...]
        MCSs other than ``w`` that encode no maximal independent set.
    with_11 : tuple[str, ...]
        MCSs containing ``11``.
    dependent : tuple[str, ...]
        MCSs other than ``w`` encoding a vertex set that contains a hyperedge.

    """

    w_present: bool
    mis_count: int
    mcs_count: int
    missing: tuple[VertexSet, ...]
    unexpected: tuple[str, ...]
    with_11: tuple[str, ...]
    dependent: tuple[str, ...] = ()

    @classmethod
    def compare(
        cls,
        mcs: cabc.Sequence[Seq],
        mis: cabc.Sequence[VertexSet],
        reduction: BinaryMcsInstance,
    ) -> BijectionReport:
        """Match enumerated MCSs against the encodings of ``mis``."""
        w = reduction.w
        encoded = {psi(u, reduction.n): u for u in mis}
        rendered = {x: "".join(x.tokens) for x in mcs}
        return cls(
            w_present=w in rendered,
            mis_count=len(mis),
            mcs_count=len(mcs),
            missing=tuple(u for x, u in encoded.items() if x not in rendered),
            unexpected=tuple(
                text
                for x, text in rendered.items()
                if x != w and x not in encoded
            ),
            with_11=tuple(text for text in rendered.values() if "11" in text),
            dependent=tuple(
                text
                for x, text in rendered.items()
                if x != w
                and (u := psi_inverse(x)) is not None
                and not is_independent(u, reduction.hypergraph)
            ),
        )

    @property
    def passed(self) -> bool:
        """True when the MCSs are ``w`` plus one encoding per MIS."""
        return (
            self.w_present
            and not self.missing
            and not self.unexpected
            and not self.with_11
            and not self.dependent
        )


def verify_bijection(  # noqa: PLR0913
    h: Hypergraph,
    *,
    method: typ.Literal["enumerator", "oracle"] = "enumerator",
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    mask_cap: int = DEFAULT_MASK_CAP,
    tuple_cap: int = DEFAULT_TUPLE_CAP,
) -> BijectionReport:
    """Compare the MCSs of ``h``'s construction with its maximal independent sets.

    Parameters
    ----------
    h : Hypergraph
        Reduction-ready hypergraph.
    method : {"enumerator", "oracle"}, optional
        How the MCS side is enumerated.
    vertex_cap : int, optional
        Cap for the MIS oracle.
    mask_cap : int, optional
        Cap for the MCS oracle.
    tuple_cap : int, optional
        Cap for the unshiftable index.

    Returns
    -------
    BijectionReport
        Counts and counterexamples.

    """
    reduction = build_hypergraph_instance(h)
    if method == "oracle":
        mcs = list(enumerate_bruteforce(reduction.strings, mask_cap=mask_cap))
    else:
        mcs = list(iter_mcs(reduction.strings, tuple_cap=tuple_cap))
    mis = enumerate_mis_bruteforce(h, vertex_cap=vertex_cap)

    report = BijectionReport.compare(mcs, mis, reduction)
    logger.debug("bijection report (%s): %s", method, report)
    return report
