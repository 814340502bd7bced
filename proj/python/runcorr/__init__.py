"""Autocorrelations of binary sequences through their run structure.

The heavy lifting lives in the compiled ``_runcorr`` extension; this
package just re-exports it.
"""

from ._runcorr import (
    BinarySequence,
    MeritFactor,
    PrefixSumTables,
    RunLengthEncoding,
    SearchResult,
    alternate,
    aperiodic_autocorrelation,
    autocorr_fast,
    autocorr_from_run_vector,
    canonicalize_periodic,
    enumerate_skew_symmetric,
    evaluate_partial,
    exhaustive_search,
    from_rle,
    is_balanced,
    is_barker,
    is_skew_symmetric,
    merit_factor,
    negate,
    peak_sidelobe_level,
    periodic_autocorr_from_run_vector,
    periodic_autocorrelation,
    periodic_run_vector,
    periodic_run_vector_bruteforce,
    prefix_sum_tables,
    pruned_search,
    reduce,
    repeat_elements,
    rotate_left,
    run_vector,
    run_vector_bruteforce,
    run_vector_prefix_formula,
    run_vector_with_count,
    second_difference,
    tail_run_values,
    to_rle,
    __version__,
)

__all__ = [
    "BinarySequence",
    "MeritFactor",
    "PrefixSumTables",
    "RunLengthEncoding",
    "SearchResult",
    "alternate",
    "aperiodic_autocorrelation",
    "autocorr_fast",
    "autocorr_from_run_vector",
    "canonicalize_periodic",
    "enumerate_skew_symmetric",
    "evaluate_partial",
    "exhaustive_search",
    "from_rle",
    "is_balanced",
    "is_barker",
    "is_skew_symmetric",
    "merit_factor",
    "negate",
    "peak_sidelobe_level",
    "periodic_autocorr_from_run_vector",
    "periodic_autocorrelation",
    "periodic_run_vector",
    "periodic_run_vector_bruteforce",
    "prefix_sum_tables",
    "pruned_search",
    "reduce",
    "repeat_elements",
    "rotate_left",
    "run_vector",
    "run_vector_bruteforce",
    "run_vector_prefix_formula",
    "run_vector_with_count",
    "second_difference",
    "tail_run_values",
    "to_rle",
    "__version__",
]
