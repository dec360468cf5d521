from fractions import Fraction
from pydantic import BaseModel, field_validator, model_validator
from typing import List


class FourierTableFile(BaseModel):
    """On-disk Fourier table: {"type", "labels", "families", "entries"}."""
    type: str
    labels: List[str]
    families: List[List[str]]
    entries: List[List[str]]

    @field_validator("entries")
    @classmethod
    def parse_entries(cls, v):
        for row in v:
            for entry in row:
                Fraction(entry)
        return v

    @model_validator(mode="after")
    def check_shape(self):
        size = len(self.labels)
        if len(set(self.labels)) != size:
            raise ValueError("Duplicate labels in Fourier table")
        if len(self.entries) != size or any(len(row) != size for row in self.entries):
            raise ValueError(f"Fourier table must be {size}x{size}")
        covered = [label for family in self.families for label in family]
        if sorted(covered) != sorted(self.labels):
            raise ValueError("Families must partition the labels")
        return self

    def matrix(self) -> List[List[Fraction]]:
        return [[Fraction(x) for x in row] for row in self.entries]
