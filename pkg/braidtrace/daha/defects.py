"""
zeta-defects: the order of vanishing of Schur elements at t = e^(pi i nu).
"""
from fractions import Fraction

from sympy import Poly, QQ, cyclotomic_poly, symbols

from braidtrace.core.exceptions import ConsistencyError
from braidtrace.core.logger import logger
from braidtrace.coxeter.systems import CoxeterSystem
from braidtrace.daha.omega import deg_at_root
from braidtrace.exactmath.cyclo import half_root
from braidtrace.reptheory.degrees import schur_element
from braidtrace.reptheory.labels import Label, irreducibles, label_key, trivial_label
from braidtrace.schemas.results import DefectRecord, DefectReport

_t = symbols("t")


def _root_multiplicity(poly: Poly, n: int) -> int:
    factor = Poly(cyclotomic_poly(n, _t), _t, domain=QQ)
    count = 0
    while not poly.is_zero:
        quotient, remainder = poly.div(factor)
        if not remainder.is_zero:
            break
        poly, count = quotient, count + 1
    return count


def defect(system: CoxeterSystem, label: Label, nu: Fraction) -> int:
    """Multiplicity of t = e^(pi i nu) as a root of s(phi_q)"""
    n, _ = half_root(Fraction(nu))
    schur = schur_element(system, label)
    num = schur.num.shift(-schur.num.valuation())
    poly = Poly({(e,): QQ(c.numerator, c.denominator) for e, c in num.items()}, _t, domain=QQ)
    return _root_multiplicity(poly, n)


def singular_count(system: CoxeterSystem, nu: Fraction) -> int:
    """|I_nu|: number of invariant degrees divisible by the denominator of nu"""
    d = Fraction(nu).denominator
    return sum(1 for deg in system.degrees if deg % d == 0)


def block_defect_report(system: CoxeterSystem, nu: Fraction) -> DefectReport:
    nu = Fraction(nu)
    principal = defect(system, trivial_label(system), nu)
    count = singular_count(system, nu)
    if nu.denominator != 1 and principal != count:
        logger.error(f"Principal defect {principal} != |I_nu| = {count} at {nu} in {system.label}")
        raise ConsistencyError("Defect of the trivial character is not |I_nu|",
                               {"defect": principal, "singular": count})
    records = []
    for label in irreducibles(system):
        d = defect(system, label, nu)
        value = deg_at_root(system, label, nu)
        maximal = d == principal
        if nu.denominator != 1 and maximal != bool(value):
            raise ConsistencyError("Maximal defect does not match Deg_phi(zeta) != 0",
                                   {"label": label_key(label), "defect": d, "deg": str(value)})
        records.append(DefectRecord(label=label_key(label), defect=d, deg_at_root=str(value), maximal=maximal))
    return DefectReport(type=system.label, slope=str(nu), singular_count=count, records=records)
