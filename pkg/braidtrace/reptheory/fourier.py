"""
The exotic Fourier pairing {phi, psi} restricted to irreducible characters.

Type A uses the identity. Dihedral tables are read from JSON files named
after the type label ("I2(4).json") in the configured data directory, or
in the packaged braidtrace/data/fourier, and validated before use.
"""
import json
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from pydantic import ValidationError as SchemaError

from braidtrace.core.config import settings
from braidtrace.core.exceptions import FourierDataError
from braidtrace.core.logger import logger
from braidtrace.coxeter.systems import CoxeterSystem
from braidtrace.reptheory.labels import Label, eps_twist, irreducibles, label_key, sign_label, trivial_label
from braidtrace.schemas.fourier import FourierTableFile

PACKAGED_DIR = Path(__file__).resolve().parent.parent / "data" / "fourier"


class FourierTable:
    """Symmetric rational matrix on irreducibles with its family partition"""

    def __init__(self, system: CoxeterSystem, entries: Dict[Tuple[Label, Label], Fraction],
                 families: List[List[Label]]):
        self.system = system
        self.labels: List[Label] = irreducibles(system)
        self.entries = entries
        self.families = families
        self._family_index = {label: i for i, family in enumerate(families) for label in family}

    def entry(self, phi: Label, psi: Label) -> Fraction:
        return self.entries.get((phi, psi), Fraction(0))

    def row(self, phi: Label) -> Dict[Label, Fraction]:
        return {psi: self.entry(phi, psi) for psi in self.labels if self.entry(phi, psi)}

    def family_of(self, label: Label) -> List[Label]:
        return self.families[self._family_index[label]]

    def is_identity(self) -> bool:
        return all(self.entry(a, b) == (1 if a == b else 0) for a in self.labels for b in self.labels)

    def validate(self) -> "FourierTable":
        sys = self.system
        for a in self.labels:
            for b in self.labels:
                if self.entry(a, b) != self.entry(b, a):
                    raise FourierDataError("Fourier table is not symmetric",
                                           {"type": sys.label, "pair": [label_key(a), label_key(b)]})
                if self.entry(eps_twist(sys, a), eps_twist(sys, b)) != self.entry(a, b):
                    raise FourierDataError("Fourier table is not invariant under the eps twist",
                                           {"type": sys.label, "pair": [label_key(a), label_key(b)]})
                if self.entry(a, b) and self._family_index[a] != self._family_index[b]:
                    raise FourierDataError("Fourier table pairs labels from different families",
                                           {"type": sys.label, "pair": [label_key(a), label_key(b)]})
        for unit in (trivial_label(sys), sign_label(sys)):
            if self.row(unit) != {unit: Fraction(1)}:
                raise FourierDataError(f"Row of {label_key(unit)} is not a unit vector", {"type": sys.label})
        return self


def _identity_table(system: CoxeterSystem) -> FourierTable:
    labels = irreducibles(system)
    return FourierTable(system, {(a, a): Fraction(1) for a in labels}, [[a] for a in labels])


def load_table_file(path: Path) -> FourierTableFile:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return FourierTableFile.model_validate(json.load(f))
    except (OSError, json.JSONDecodeError) as e:
        raise FourierDataError(f"Cannot read Fourier table {path}", {"error": str(e)})
    except SchemaError as e:
        raise FourierDataError(f"Malformed Fourier table {path}", {"errors": e.errors(include_url=False)})


def table_from_file(system: CoxeterSystem, data: FourierTableFile) -> FourierTable:
    if data.type != system.label:
        raise FourierDataError("Fourier table is for another type", {"expected": system.label, "found": data.type})
    labels = irreducibles(system)
    by_key = {label_key(x): x for x in labels}
    if sorted(data.labels) != sorted(by_key):
        raise FourierDataError("Fourier table labels do not match the irreducibles",
                               {"expected": sorted(by_key), "found": data.labels})
    matrix = data.matrix()
    entries = {}
    for i, a in enumerate(data.labels):
        for j, b in enumerate(data.labels):
            if matrix[i][j]:
                entries[(by_key[a], by_key[b])] = matrix[i][j]
    families = [[by_key[x] for x in family] for family in data.families]
    return FourierTable(system, entries, families).validate()


@lru_cache(maxsize=None)
def _cached_table(system: CoxeterSystem, directory: Optional[str]) -> FourierTable:
    if system.is_type_a:
        return _identity_table(system)
    path = (Path(directory) if directory else PACKAGED_DIR) / f"{system.label}.json"
    if not path.exists():
        logger.warning(f"No Fourier table for {system.label} in {path.parent}")
        raise FourierDataError(f"No Fourier table available for {system.label}", {"path": str(path)})
    logger.debug(f"Loading Fourier table {path}")
    return table_from_file(system, load_table_file(path))


def fourier_table(system: CoxeterSystem) -> FourierTable:
    return _cached_table(system, settings.DATA_DIR)
