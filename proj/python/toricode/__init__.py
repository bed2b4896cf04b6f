"""Toric ideals, Groebner bases and Graver bases of combinatorial neural codes.

The heavy lifting happens in the C++ extension ``toricode._core``; this
package re-exports its surface.
"""

from ._core import (
    Code,
    DomainError,
    FormatError,
    ResourceError,
    all_quadratic_binomials,
    classify,
    depth1_indispensables,
    dual_graph_edges,
    graver_basis,
    ideal_is_zero,
    indispensable_binomials,
    internal_code,
    pairwise_sum_binomials,
    parse_code,
    parse_code_file,
    reduced_basis,
    toric_generators,
    universal_gb,
    verify_suite,
    __version__,
)

__all__ = [
    "Code",
    "DomainError",
    "FormatError",
    "ResourceError",
    "all_quadratic_binomials",
    "classify",
    "depth1_indispensables",
    "dual_graph_edges",
    "graver_basis",
    "ideal_is_zero",
    "indispensable_binomials",
    "internal_code",
    "pairwise_sum_binomials",
    "parse_code",
    "parse_code_file",
    "reduced_basis",
    "toric_generators",
    "universal_gb",
    "verify_suite",
    "__version__",
]
