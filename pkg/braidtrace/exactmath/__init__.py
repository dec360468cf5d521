from braidtrace.exactmath.cyclo import Cyclo, half_root
from braidtrace.exactmath.laurent import HalfLaurent, ONE, ZERO, T, T_INV, DELTA
from braidtrace.exactmath.series import TruncSeries
from braidtrace.exactmath.rfunc import RFunc, one_minus_q_power
from braidtrace.exactmath.bivariate import ATLaurent, ARFunc

__all__ = [
    "Cyclo", "half_root", "HalfLaurent", "ONE", "ZERO", "T", "T_INV", "DELTA",
    "TruncSeries", "RFunc", "one_minus_q_power", "ATLaurent", "ARFunc",
]
