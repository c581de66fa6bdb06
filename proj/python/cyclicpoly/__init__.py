"""Exact f-vectors of cyclic polytopes.

Everything lives in the compiled extension: h-vectors, f-vectors by three
independent routes, the generalized Pascal triangle, dip / log-concavity /
unimodality analysis, a Gale-evenness facet oracle, and range sweeps. All
counts are exact and cross into Python as arbitrary-precision ints.
"""

from ._core import (  # noqa: F401
    DEFAULT_ORACLE_CAP,
    __version__,
    analyze,
    analyze_params,
    audit_dip_propagation,
    binom,
    enumerate_facets,
    f_entry,
    f_vector,
    find_dips,
    h_vector,
    is_gale_facet,
    is_log_concave,
    is_unimodal,
    lemma_check,
    pascal_extend,
    pascal_row,
    sweep,
    triangle_entry,
    triangle_rows,
)

__all__ = [
    "DEFAULT_ORACLE_CAP",
    "analyze",
    "analyze_params",
    "audit_dip_propagation",
    "binom",
    "enumerate_facets",
    "f_entry",
    "f_vector",
    "find_dips",
    "h_vector",
    "is_gale_facet",
    "is_log_concave",
    "is_unimodal",
    "lemma_check",
    "pascal_extend",
    "pascal_row",
    "sweep",
    "triangle_entry",
    "triangle_rows",
]
