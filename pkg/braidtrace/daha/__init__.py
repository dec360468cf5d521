from braidtrace.daha.graded import GradedChar, verma_char, verma_shift
from braidtrace.daha.omega import (
    omega_char, omega_integrality, periodic_trace, omega_bridge_check, principal_series_identity,
)
from braidtrace.daha.defects import defect, block_defect_report
from braidtrace.daha.simples import cuspidal_L_char, bgg_sum, gors_check

__all__ = [
    "GradedChar", "verma_char", "verma_shift",
    "omega_char", "omega_integrality", "periodic_trace", "omega_bridge_check", "principal_series_identity",
    "defect", "block_defect_report", "cuspidal_L_char", "bgg_sum", "gors_check",
]
