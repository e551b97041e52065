"""Pieri and dual Pieri rules for Sp_2n, O_N and SO_N.

The package computes the closed-form multiplicity rules, checks them against
exact Weyl-character and symmetric-function oracles, and counts the tableaux
that appear in the resulting equinumeration identities.
"""

from .kernels import BACKEND
from .partitions import Partition, conjugate, parse_partition, format_partition

__all__ = ["BACKEND", "Partition", "conjugate", "parse_partition", "format_partition"]
__version__ = "0.1.0"
