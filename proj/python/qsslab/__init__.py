"""Exact analysis of the (3,5) qubit secret sharing scheme built on the 5-qubit code."""

from ._core import (
    AccessReport,
    BoundReport,
    Classification,
    DistanceReport,
    DomainError,
    IndeterminateError,
    SearchReport,
    SubsetVerdict,
    UnqualifiedError,
    WeightSummary,
    __version__,
    access_structure_report,
    apply_pauli,
    check_bound,
    classify_subset,
    eigenvalues_hermitian,
    encode_classical,
    encode_quantum,
    holevo_information,
    reconstruct_classical,
    reconstruct_quantum,
    reduced_state,
    scheme_subset_status,
    search_linear_schemes,
    trace_distance,
    verify_distance,
    von_neumann_entropy,
)

__all__ = [name for name in dir() if not name.startswith("_")]
