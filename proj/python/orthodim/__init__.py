"""Kernels, deciders, reductions and certificates for graph orthogonality dimension."""

from ._orthodim import (
    certify_no,
    chromatic_number,
    compute_m,
    decide_od,
    emit_etr,
    fpt_decide_vc,
    gen_instance,
    kernel_general,
    kernel_hereditary,
    kernel_real,
    parse_instance,
    reduce_coloring,
    run_suite,
    suite_names,
    verify_gadget,
)

__all__ = [
    "certify_no",
    "chromatic_number",
    "compute_m",
    "decide_od",
    "emit_etr",
    "fpt_decide_vc",
    "gen_instance",
    "kernel_general",
    "kernel_hereditary",
    "kernel_real",
    "parse_instance",
    "reduce_coloring",
    "run_suite",
    "suite_names",
    "verify_gadget",
]
