"""Embedding dimension selection for undirected networks.

Compares the eigenvalues of a normalized adjacency matrix against those of
randomly signflipped copies and keeps the eigenvalues that rise above the
estimated spectral noise floor.
"""

from ._core import (
    DcsbmParams,
    DecayFit,
    DegreeData,
    NormalizedAdjacency,
    SelectionResult,
    SignalNoiseParts,
    __version__,
    build_parts,
    community_matrix,
    decay_fit,
    eigh_topk,
    eigvals_sym,
    embed,
    expected_adjacency,
    format_edge_list,
    moment_norm,
    normalized_adjacency,
    op_norm,
    parse_edge_list,
    preset,
    sample_adjacency,
    select_dimension,
    set_max_threads,
    signflip,
    two_inf_norm,
)

__all__ = [
    "DcsbmParams",
    "DecayFit",
    "DegreeData",
    "NormalizedAdjacency",
    "SelectionResult",
    "SignalNoiseParts",
    "__version__",
    "build_parts",
    "community_matrix",
    "decay_fit",
    "eigh_topk",
    "eigvals_sym",
    "embed",
    "expected_adjacency",
    "format_edge_list",
    "moment_norm",
    "normalized_adjacency",
    "op_norm",
    "parse_edge_list",
    "preset",
    "sample_adjacency",
    "select_dimension",
    "set_max_threads",
    "signflip",
    "two_inf_norm",
]
