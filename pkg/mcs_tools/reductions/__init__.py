"""Executable hardness constructions: 3-SAT and hypergraph MIS to MCS."""

from __future__ import annotations

from mcs_tools.reductions.hypergraph import (
    BinaryMcsInstance,
    Hypergraph,
    build_hypergraph_instance,
    verify_bijection,
)
from mcs_tools.reductions.sat import (
    Cnf3,
    ReductionAssumptionError,
    SatMcsInstance,
    build_sat_instance,
    verify_sat_reduction,
)

__all__ = [
    "BinaryMcsInstance",
    "Cnf3",
    "Hypergraph",
    "ReductionAssumptionError",
    "SatMcsInstance",
    "build_hypergraph_instance",
    "build_sat_instance",
    "verify_bijection",
    "verify_sat_reduction",
]
