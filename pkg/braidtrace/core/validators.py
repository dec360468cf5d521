import re
from fractions import Fraction
from typing import Optional

from sympy import isprime

from braidtrace.core.exceptions import BraidSyntaxError, UnsupportedTypeError, ValidationError
from braidtrace.core.logger import logger
from braidtrace.coxeter.braids import BraidWord
from braidtrace.coxeter.systems import CoxeterSystem, dihedral, type_a


class InputValidator:
    """Parsing and validation of command-line inputs"""

    # Named dihedral types
    ALIASES = {"BC2": 4, "B2": 4, "C2": 4, "G2": 6}

    TYPE_PATTERNS = (
        re.compile(r"^A\s*\(\s*(\d+)\s*\)$"),
        re.compile(r"^A(\d+)$"),
    )
    DIHEDRAL_PATTERN = re.compile(r"^I2\s*\(\s*(\d+)\s*\)$")
    SLOPE_PATTERN = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+)\s*)?$")

    def parse_type(self, text: str) -> CoxeterSystem:
        """A1..A8, A(n), I2(m), BC2/B2, G2"""
        name = (text or "").strip().upper()
        if name in self.ALIASES:
            return dihedral(self.ALIASES[name])
        for pattern in self.TYPE_PATTERNS:
            match = pattern.match(name)
            if match:
                n = int(match.group(1))
                if n < 1:
                    raise UnsupportedTypeError(f"A({n}) has no generators", {"type": text})
                return type_a(n)
        match = self.DIHEDRAL_PATTERN.match(name)
        if match:
            return dihedral(int(match.group(1)))
        logger.debug(f"Rejected type string {text!r}")
        raise UnsupportedTypeError(f"Unsupported Coxeter type: {text!r}",
                                   {"accepted": "A1..A8, A(n), I2(m), BC2, B2, G2"})

    def parse_braid(self, text: str, system: Optional[CoxeterSystem] = None) -> BraidWord:
        """Whitespace or comma separated signed generator indices"""
        tokens = [tok for tok in re.split(r"[\s,]+", (text or "").strip()) if tok]
        letters = []
        for tok in tokens:
            try:
                value = int(tok)
            except ValueError:
                raise BraidSyntaxError(f"Not a generator index: {tok!r}", {"braid": text})
            if value == 0:
                raise BraidSyntaxError("Generator index 0 is not allowed", {"braid": text})
            letters.append(value)
        word = BraidWord(tuple(letters))
        if system is not None:
            word.validate(system)
        return word

    def parse_slope(self, text: str) -> Fraction:
        match = self.SLOPE_PATTERN.match(str(text or ""))
        if not match:
            raise ValidationError(f"Slope must be p/q or an integer, got {text!r}")
        den = int(match.group(2) or 1)
        if den == 0:
            raise ValidationError("Slope denominator is zero", {"slope": text})
        return Fraction(int(match.group(1)), den)

    def parse_prime(self, q, limit: Optional[int] = None) -> int:
        try:
            value = int(q)
        except (TypeError, ValueError):
            raise ValidationError(f"q must be an integer, got {q!r}")
        if not isprime(value):
            raise ValidationError(f"q = {value} is not prime", {"q": value})
        if limit is not None and value > limit:
            raise ValidationError(f"q = {value} exceeds the limit {limit}", {"q": value, "limit": limit})
        return value


# Global validator instance
input_validator = InputValidator()
