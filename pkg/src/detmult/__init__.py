"""Exact invariants of determinantal ideals from their degree matrix."""

from .conjecture import FuzzConfig, MultiplicityReport, check_bounds, fuzz_campaign
from .degmat import DegreeMatrix, DegreeMatrixError, canonicalize, from_full_matrix, from_vectors
from .multiplicity import (
    InvariantViolation,
    multiplicity_en,
    multiplicity_linkage,
    multiplicity_linkage_dual,
    multiplicity_pure,
)
from .resolution import BettiTable, KPolynomial, betti_table, betti_table_enumerated, k_polynomial
from .shifts import ShiftVector, max_shifts, min_shifts

__version__ = "0.1.0"
