from braidtrace.coxeter.systems import CoxeterSystem, Elem, partitions, cycle_type, type_a, dihedral
from braidtrace.coxeter.braids import (
    BraidWord, lift_sigma, full_twist, torus_braid, positive_normal_form, is_periodic_witness,
)
from braidtrace.coxeter.regular import (
    regular_elements, is_regular_slope, is_regular_element, regular_element_of_order, regular_numbers,
)

__all__ = [
    "CoxeterSystem", "Elem", "partitions", "cycle_type", "type_a", "dihedral",
    "BraidWord", "lift_sigma", "full_twist", "torus_braid", "positive_normal_form",
    "is_periodic_witness", "regular_elements", "is_regular_slope", "is_regular_element",
    "regular_element_of_order", "regular_numbers",
]
