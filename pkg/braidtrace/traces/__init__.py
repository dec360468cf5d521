from braidtrace.traces.rtrace import (
    TraceResult, rw_trace, rw_trace0, trace_result, tau_from_trace, kalman_identity,
)
from braidtrace.traces.markov import markov_trace, markov_trace_via_weights, molien_weights, homfly

__all__ = [
    "TraceResult", "rw_trace", "rw_trace0", "trace_result", "tau_from_trace", "kalman_identity",
    "markov_trace", "markov_trace_via_weights", "molien_weights", "homfly",
]
