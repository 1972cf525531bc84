"""mcs-tools: maximal common subsequence enumeration and hardness constructions.

Enumerates the maximal common subsequences of k strings with bounded delay,
checks them against an exhaustive oracle, and builds the SAT and hypergraph
instances that make MCS counting and assessment hard.
"""

from __future__ import annotations

__version__ = "0.1.0"
__all__ = ["__version__"]
