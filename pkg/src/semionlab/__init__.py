"""semionlab: exact simulator of the semion code on a honeycomb torus."""

from .lattice import Lattice, Path, build_torus, conn, b_set, classify_paths
from .scalar import ExactScalar, UnitPhase

__all__ = [
    "Lattice",
    "Path",
    "build_torus",
    "conn",
    "b_set",
    "classify_paths",
    "ExactScalar",
    "UnitPhase",
]

__version__ = "0.1.0"
