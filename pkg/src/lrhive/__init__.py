"""Exact Littlewood-Richardson coefficient computations via the hive model,
closed-form formulas, Horn-cone membership, piecewise quasi-polynomial
counting functions, and conjecture verification sweeps."""

__version__ = "0.1.0"

# Revision stamp of the hard-coded tables (facet systems, Hilbert generators,
# piecewise polynomial transcriptions).  Bump when any table changes.
TABLES_REVISION = 1

from .partitions import Partition  # noqa: F401  (primary entry type)
from .coefficients import lr_coefficient  # noqa: F401
