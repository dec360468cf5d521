from braidtrace.reptheory.labels import Label, irreducibles, parse_label, label_key, label_text, eps_twist
from braidtrace.reptheory.chartable import CharacterTable, character_table, char_table
from braidtrace.reptheory.virtual import VirtualCharacter
from braidtrace.reptheory.matrixrep import MatrixRep, matrix_rep
from braidtrace.reptheory.characters import (
    hecke_char, hecke_char_via_basis, trace_table, full_twist_scalar, full_twist_scalar_check,
)
from braidtrace.reptheory.molien import molien, molien_bivariate, fake_degree, sym_character, alt_character
from braidtrace.reptheory.fourier import FourierTable, fourier_table
from braidtrace.reptheory.degrees import (
    content, generic_degree, schur_element, schur_element_direct, degrees_bundle,
    fake_degree_regular_identity, periodic_character_identity,
)
from braidtrace.reptheory.induction import induce

__all__ = [
    "Label", "irreducibles", "parse_label", "label_key", "label_text", "eps_twist",
    "CharacterTable", "character_table", "char_table", "VirtualCharacter",
    "MatrixRep", "matrix_rep", "hecke_char", "hecke_char_via_basis", "trace_table",
    "full_twist_scalar", "full_twist_scalar_check",
    "molien", "molien_bivariate", "fake_degree", "sym_character", "alt_character",
    "FourierTable", "fourier_table",
    "content", "generic_degree", "schur_element", "schur_element_direct", "degrees_bundle",
    "fake_degree_regular_identity", "periodic_character_identity",
    "induce",
]
