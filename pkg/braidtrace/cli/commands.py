"""
Command handlers. Each takes the parsed arguments and returns a
CommandResult carrying both the text and the JSON rendering.
"""
import argparse
import json
from pathlib import Path

from braidtrace.cli.render import as_series, mapping_text
from braidtrace.cli.router import router
from braidtrace.cli.selftest import run_selftest
from braidtrace.core.config import settings
from braidtrace.core.exceptions import ConsistencyError, ValidationError
from braidtrace.core.validators import input_validator
from braidtrace.coxeter.braids import positive_normal_form
from braidtrace.coxeter.regular import is_regular_slope
from braidtrace.daha.graded import verma_char
from braidtrace.daha.omega import omega_char, periodic_trace
from braidtrace.daha.simples import cuspidal_L_char, gors_check
from braidtrace.exactmath.rfunc import RFunc
from braidtrace.ffcount.counting import count_chains
from braidtrace.ffcount.flags import group_system
from braidtrace.ffcount.springer import springer_decompose
from braidtrace.ffcount.x0 import count_x0
from braidtrace.hecke.algebra import braid_image
from braidtrace.reptheory.characters import hecke_char
from braidtrace.reptheory.degrees import degrees_bundle
from braidtrace.reptheory.fourier import fourier_table
from braidtrace.reptheory.labels import irreducibles, label_key, label_text, parse_label
from braidtrace.reptheory.molien import molien
from braidtrace.reptheory.virtual import VirtualCharacter
from braidtrace.schemas.results import CommandResult
from braidtrace.traces.markov import homfly, markov_trace
from braidtrace.traces.rtrace import rw_trace, rw_trace0


def _system_and_word(args: argparse.Namespace):
    system = input_validator.parse_type(args.type)
    return system, input_validator.parse_braid(args.braid, system)


def _labels(system, args: argparse.Namespace):
    if args.label:
        return [parse_label(system, args.label)]
    return irreducibles(system)


def _virtual(name: str, value: VirtualCharacter) -> CommandResult:
    return CommandResult(command=name, text=value.render(), data=value.to_json())


@router.command("trace", "R(W)-valued trace Tr(beta)", ("type", "braid"))
def trace_command(args: argparse.Namespace) -> CommandResult:
    system, word = _system_and_word(args)
    return _virtual("trace", rw_trace(system, word))


@router.command("trace0", "normalized trace Tr0(beta)", ("type", "braid"))
def trace0_command(args: argparse.Namespace) -> CommandResult:
    system, word = _system_and_word(args)
    return _virtual("trace0", as_series(rw_trace0(system, word), args.order))


@router.command("markov", "Markov trace as a function of a and q", ("type", "braid"))
def markov_command(args: argparse.Namespace) -> CommandResult:
    system, word = _system_and_word(args)
    value = markov_trace(system, word)
    data = {"value": value.render(ascii_only=True)}
    if value.is_laurent():
        data["laurent"] = value.to_atlaurent().to_json()
    return CommandResult(command="markov", text=value.render(), data=data)


@router.command("homfly", "HOMFLY polynomial of the braid closure (type A)", ("type", "braid"))
def homfly_command(args: argparse.Namespace) -> CommandResult:
    system, word = _system_and_word(args)
    value = homfly(system, word)
    return CommandResult(command="homfly", text=value.render(), data=value.to_json())


@router.command("hecke-expand", "expand the braid in the sigma_w basis", ("type", "braid"))
def hecke_expand_command(args: argparse.Namespace) -> CommandResult:
    system, word = _system_and_word(args)
    image = braid_image(system, word)
    data = {}
    for w in image.support():
        word = system.reduced_word(w)
        # same element names as HeckeElement.render
        name = "T[" + ",".join(str(i) for i in word) + "]" if word else "1"
        data[name] = image.coefficient(w).render(ascii_only=True)
    return CommandResult(command="hecke-expand", text=image.render(), data=data)


@router.command("char", "Hecke character values phi_q(beta)", ("type", "braid", "label"))
def char_command(args: argparse.Namespace) -> CommandResult:
    system, word = _system_and_word(args)
    values = {label: hecke_char(system, label, word) for label in _labels(system, args)}
    text = mapping_text({label_text(k): v.render() for k, v in values.items()})
    return CommandResult(command="char", text=text,
                         data={label_key(k): v.render(ascii_only=True) for k, v in values.items()})


@router.command("degrees", "fake degree, generic degree, Schur element, a, A, content", ("type", "label"))
def degrees_command(args: argparse.Namespace) -> CommandResult:
    system = input_validator.parse_type(args.type)
    records = [degrees_bundle(system, label) for label in _labels(system, args)]
    lines = [
        f"{r.label}: Feg = {r.feg.render()}; Deg = {r.deg.render()}; "
        f"Schur = {r.schur.render()}; a = {r.a}; A = {r.A}; c = {r.content}"
        for r in records
    ]
    return CommandResult(command="degrees", text="\n".join(lines), data=[r.to_json() for r in records])


@router.command("molien", "graded multiplicities in Sym V", ("type", "label"))
def molien_command(args: argparse.Namespace) -> CommandResult:
    system = input_validator.parse_type(args.type)
    values = VirtualCharacter(system, {label: molien(system, label) for label in _labels(system, args)})
    return _virtual("molien", as_series(values, args.order))


@router.command("fourier", "exotic Fourier matrix and families", ("type",))
def fourier_command(args: argparse.Namespace) -> CommandResult:
    system = input_validator.parse_type(args.type)
    table = fourier_table(system)
    keys = [label_key(label) for label in table.labels]
    matrix = [[str(table.entry(a, b)) for b in table.labels] for a in table.labels]
    width = max(len(x) for row in matrix + [keys] for x in row)
    lines = [" " * width + "  " + "  ".join(k.rjust(width) for k in keys)]
    for key, row in zip(keys, matrix):
        lines.append(key.rjust(width) + "  " + "  ".join(x.rjust(width) for x in row))
    data = {
        "type": system.label,
        "labels": keys,
        "families": [[label_key(label) for label in family] for family in table.families],
        "entries": matrix,
    }
    return CommandResult(command="fourier", text="\n".join(lines), data=data)


@router.command("normal-form", "left-greedy normal form of a positive braid", ("type", "braid"))
def normal_form_command(args: argparse.Namespace) -> CommandResult:
    system, word = _system_and_word(args)
    factors = [list(system.reduced_word(w)) for w in positive_normal_form(system, word)]
    text = " | ".join(" ".join(str(i) for i in f) for f in factors) or "1"
    return CommandResult(command="normal-form", text=text, data=factors)


@router.command("slope-classify", "regular / cuspidal / singular classification of a slope", ("type", "slope"))
def slope_classify_command(args: argparse.Namespace) -> CommandResult:
    system = input_validator.parse_type(args.type)
    report = is_regular_slope(system, input_validator.parse_slope(args.slope))
    text = f"{report.type} at {report.slope}: {report.classification} ({', '.join(report.flags)})"
    return CommandResult(command="slope-classify", text=text, data=report.model_dump())


@router.command("periodic", "trace of a periodic braid at a regular slope", ("type", "slope"))
def periodic_command(args: argparse.Namespace) -> CommandResult:
    system = input_validator.parse_type(args.type)
    return _virtual("periodic", periodic_trace(system, input_validator.parse_slope(args.slope)))


def _graded(name: str, value, order) -> CommandResult:
    if order is not None:
        parts = value.series(order)
        text = " + ".join(v.render() if s == 0 else f"q^({s})·({v.render()})" for s, v in sorted(parts.items()))
        return CommandResult(command=name, text=text or "0",
                             data={str(s): v.to_json() for s, v in sorted(parts.items())})
    return CommandResult(command=name, text=value.render(), data=value.to_json())


@router.command("verma", "graded character of a standard module", ("type", "slope", "label"))
def verma_command(args: argparse.Namespace) -> CommandResult:
    system = input_validator.parse_type(args.type)
    if not args.label:
        raise ValidationError("verma needs --label")
    value = verma_char(system, input_validator.parse_slope(args.slope), parse_label(system, args.label))
    return _graded("verma", value, args.order)


@router.command("omega", "the Deg-weighted virtual module Omega_nu", ("type", "slope"))
def omega_command(args: argparse.Namespace) -> CommandResult:
    system = input_validator.parse_type(args.type)
    return _graded("omega", omega_char(system, input_validator.parse_slope(args.slope)), args.order)


@router.command("lchar", "graded character of L_nu(1) at a cuspidal slope", ("type", "slope"))
def lchar_command(args: argparse.Namespace) -> CommandResult:
    system = input_validator.parse_type(args.type)
    value = cuspidal_L_char(system, input_validator.parse_slope(args.slope))
    result = _graded("lchar", value, args.order)
    return CommandResult(command="lchar", text=f"{result.text}\ndim = {value.dimension()}",
                         data={"character": result.data, "dimension": str(value.dimension())})


@router.command("gors-check", "torus knot HOMFLY from Tr0 against L_{m/n}(1)", ("n", "m"))
def gors_check_command(args: argparse.Namespace) -> CommandResult:
    if not gors_check(args.n, args.m):
        raise ConsistencyError(f"HOMFLY comparison fails for the ({args.m}, {args.n}) torus knot")
    return CommandResult(command="gors-check", text="pass", data={"n": args.n, "m": args.m, "passed": True})


@router.command("springer-decompose", "Tr0 in the basis of total Springer representations",
                ("type", "braid", "input"))
def springer_decompose_command(args: argparse.Namespace) -> CommandResult:
    system = input_validator.parse_type(args.type)
    if args.input:
        try:
            data = json.loads(Path(args.input).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise ValidationError(f"Cannot read trace file {args.input}: {e}")
        tr0 = VirtualCharacter.from_json(system, data)
    else:
        tr0 = rw_trace0(system, input_validator.parse_braid(args.braid, system))
    coeffs = springer_decompose(system, tr0.map(RFunc.coerce))
    text = mapping_text({f"c{label_key(mu)}": c.render() for mu, c in sorted(coeffs.items())})
    return CommandResult(command="springer-decompose", text=text or "0",
                         data={label_key(mu): c.render(ascii_only=True) for mu, c in sorted(coeffs.items())})


@router.command("ffcount", "finite-field point counts of braid varieties", ("group", "q", "braid", "fiber"))
def ffcount_command(args: argparse.Namespace) -> CommandResult:
    word = input_validator.parse_braid(args.braid, group_system(args.group))
    if args.fiber == "x0":
        if args.group != "GL2":
            raise ValidationError("The X_0 chart is counted for GL2")
        q = input_validator.parse_prime(args.q, settings.X0_MAX_Q)
        counts = {"x0": count_x0(q, word)}
    else:
        q = input_validator.parse_prime(args.q, settings.FF_MAX_Q)
        counts = count_chains(args.group, q, word, fiber=args.fiber).counts
    return CommandResult(command="ffcount", text=mapping_text(counts), data=counts)


@router.command("selftest", "run the golden corpus")
def selftest_command(args: argparse.Namespace) -> CommandResult:
    results = run_selftest()
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name}" for r in results]
    failed = sum(1 for r in results if not r.passed)
    lines.append(f"{len(results) - failed}/{len(results)} passed")
    return CommandResult(
        command="selftest",
        text="\n".join(lines),
        data=[r.model_dump() for r in results],
        exit_code=3 if failed else 0,
    )
