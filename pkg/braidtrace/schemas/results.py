from pydantic import BaseModel, ConfigDict, Field
from typing import Any, Dict, List, Optional


class SlopeReport(BaseModel):
    """Classification of a rational slope for one Coxeter system."""
    model_config = ConfigDict(frozen=True)

    type: str
    slope: str
    denominator: int
    singular_degrees: List[int] = Field(default_factory=list)
    classification: str
    flags: List[str]
    regular_classes: List[str] = Field(default_factory=list)

    def has(self, flag: str) -> bool:
        return flag in self.flags


class DegreesRecord(BaseModel):
    """Fake degree, unipotent degree, Schur element and a/A/content of an irreducible."""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    label: str
    feg: Any
    deg: Any
    schur: Any
    a: int
    A: int
    content: int

    def to_json(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "Feg": self.feg.to_json(),
            "Deg": self.deg.to_json(),
            "Schur": self.schur.to_json(),
            "a": self.a,
            "A": self.A,
            "content": self.content,
        }


class DefectRecord(BaseModel):
    """zeta-defect of one irreducible at a slope."""
    model_config = ConfigDict(frozen=True)

    label: str
    defect: int
    deg_at_root: str
    maximal: bool


class DefectReport(BaseModel):
    """Defects of every irreducible at one slope."""
    model_config = ConfigDict(frozen=True)

    type: str
    slope: str
    singular_count: int
    records: List[DefectRecord]


class CountReport(BaseModel):
    """Finite-field point counts, keyed by fiber or unipotent class."""
    model_config = ConfigDict(frozen=True)

    group: str
    q: int
    braid: List[int]
    fiber: str
    counts: Dict[str, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


class VerificationReport(BaseModel):
    """Outcome of comparing two independent computations."""
    model_config = ConfigDict(frozen=True)

    name: str
    passed: bool
    expected: Optional[str] = None
    actual: Optional[str] = None
    discrepancies: Dict[str, str] = Field(default_factory=dict)
    flagged: bool = False

    def __bool__(self) -> bool:
        return self.passed


class CommandResult(BaseModel):
    """Rendered output of one CLI command."""
    model_config = ConfigDict(frozen=True)

    command: str
    text: str
    data: Any = None
    exit_code: int = 0
