"""Quantum random access coding toolkit.

Thin wrapper over the C++ core: scheme evaluation, Bloch-vector geometry,
halfspace certificates, region counting and the see-saw optimizer.
"""

from ._qrac import (
    bloch_to_density,
    buzek_hillery_clone,
    density_to_bloch,
    encode_ambainis2,
    encode_chuang3,
    encode_hinry7,
    evaluate_builtin,
    gell_mann_basis,
    max_regions,
    measure_prob,
    nayak_bound,
    no_go_builtin,
    realized_pattern_count,
    scheme_halfspaces,
    see_saw,
)

__all__ = [
    "bloch_to_density",
    "buzek_hillery_clone",
    "density_to_bloch",
    "encode_ambainis2",
    "encode_chuang3",
    "encode_hinry7",
    "evaluate_builtin",
    "gell_mann_basis",
    "max_regions",
    "measure_prob",
    "nayak_bound",
    "no_go_builtin",
    "realized_pattern_count",
    "scheme_halfspaces",
    "see_saw",
]
