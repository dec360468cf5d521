"""
Text and JSON rendering helpers shared by the command handlers.
"""
import json
from typing import Any, Mapping, Optional

from braidtrace.exactmath.rfunc import RFunc
from braidtrace.reptheory.virtual import VirtualCharacter


def dump_json(data: Any) -> str:
    return json.dumps(data, separators=(",", ":"), ensure_ascii=False)


def as_series(value: VirtualCharacter, order: Optional[int]) -> VirtualCharacter:
    """Rational-function coefficients, expanded to q^order when requested"""
    value = value.map(RFunc.coerce)
    if order is None:
        return value
    return value.map(lambda c: c.to_series(order))


def mapping_text(values: Mapping[str, Any]) -> str:
    return "\n".join(f"{key}: {value}" for key, value in values.items())

