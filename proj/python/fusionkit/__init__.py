"""Fusion rings, Foelner conditions and truncated Kesten spectra.

Labels are strings in each ring's own notation: integers for su2 and Z, reduced words such as
"aB" for free groups, and "(x,y)" pairs for tensor products.
"""

from ._fusionkit import (
    FusionError,
    Ring,
    boundary,
    dirichlet_norm,
    fc1_check,
    fc2_check,
    fc3_check,
    foelner_search,
    l_matrix,
    nw_ratio,
    run_cli,
    spectrum,
    transition_kernel,
    weighted_norm,
)

__all__ = [
    "FusionError",
    "Ring",
    "boundary",
    "dirichlet_norm",
    "fc1_check",
    "fc2_check",
    "fc3_check",
    "foelner_search",
    "l_matrix",
    "nw_ratio",
    "run_cli",
    "spectrum",
    "transition_kernel",
    "weighted_norm",
]
