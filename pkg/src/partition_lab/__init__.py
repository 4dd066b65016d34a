"""Exact-arithmetic lab for the generalized Franklin identity and its Beck-type companion.

Three independent routes compute the same numbers: exhaustive partition
enumeration (:mod:`.counting`), truncated q-series coefficients
(:mod:`.qseries`) and transport through the explicit bijection
(:mod:`.bijection`).  :mod:`.verify` runs them against each other.
"""

from .bijection import phi, psi, verify_roundtrip
from .counting import (
    count_D,
    count_O,
    excess,
    excess_cumulative,
    excess_refined,
)
from .partition_core import (
    Partition,
    enumerate_partitions,
    format_partition,
    parse_partition,
)
from .qseries import PolyZW, TruncatedSeries, d_dw_at_1
from .report import VerificationReport

__all__ = [
    "Partition",
    "PolyZW",
    "TruncatedSeries",
    "VerificationReport",
    "count_D",
    "count_O",
    "d_dw_at_1",
    "enumerate_partitions",
    "excess",
    "excess_cumulative",
    "excess_refined",
    "format_partition",
    "parse_partition",
    "phi",
    "psi",
    "verify_roundtrip",
]

__version__ = "0.1.0"
