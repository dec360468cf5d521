from braidtrace.ffcount.flags import FlagVariety, flag_variety, group_order, borel_order, unipotent_elements
from braidtrace.ffcount.counting import count_chains, unipotent_counts, steinberg_counts
from braidtrace.ffcount.x0 import count_x0, count_x0_brute, fiber_proposition
from braidtrace.ffcount.springer import (
    kostka_foulkes, springer_table, springer_decompose, q1_identity, orthogonality_identity,
)
from braidtrace.ffcount.verification import (
    verify_virtual, verify_kalman, verify_hecke_prediction, hecke_prediction, interpolate_counts,
)

__all__ = [
    "FlagVariety", "flag_variety", "group_order", "borel_order", "unipotent_elements",
    "count_chains", "unipotent_counts", "steinberg_counts",
    "count_x0", "count_x0_brute", "fiber_proposition",
    "kostka_foulkes", "springer_table", "springer_decompose", "q1_identity", "orthogonality_identity",
    "verify_virtual", "verify_kalman", "verify_hecke_prediction", "hecke_prediction", "interpolate_counts",
]
