"""
Command registry: handlers register with the options they take, and the
parser is built from the registry.
"""
import argparse
from dataclasses import dataclass, field
from typing import Callable, Dict, Tuple

from braidtrace.schemas.results import CommandResult

Handler = Callable[[argparse.Namespace], CommandResult]

# name -> (flags, argparse keyword arguments)
OPTIONS: Dict[str, Tuple[Tuple[str, ...], dict]] = {
    "type": (("--type",), {"dest": "type", "required": True,
                           "help": "Coxeter type: A1..A8, A(n), I2(m), BC2, B2, G2"}),
    "braid": (("--braid",), {"default": "", "help": "signed generator indices, e.g. \"1 -2 1\""}),
    "slope": (("--slope",), {"required": True, "help": "rational slope p/q"}),
    "label": (("--label",), {"default": None, "help": "irreducible label, e.g. [2,1] or phi_1"}),
    "input": (("--input",), {"default": None, "help": "trace0 JSON file"}),
    "group": (("--group",), {"required": True, "choices": ("SL2", "GL2", "SL3", "GL3")}),
    "q": (("--q",), {"required": True, "help": "prime field size"}),
    "fiber": (("--fiber",), {"default": "one",
                             "choices": ("one", "all", "unipotent", "steinberg", "x0")}),
    "n": (("--n",), {"type": int, "required": True, "help": "number of strands"}),
    "m": (("--m",), {"type": int, "required": True, "help": "torus knot parameter"}),
}


@dataclass
class Command:
    name: str
    handler: Handler
    help: str
    options: Tuple[str, ...] = field(default_factory=tuple)


class CommandRouter:
    def __init__(self):
        self.commands: Dict[str, Command] = {}

    def command(self, name: str, help: str, options: Tuple[str, ...] = ()):
        def register(handler: Handler) -> Handler:
            self.commands[name] = Command(name, handler, help, tuple(options))
            return handler
        return register

    def build_parser(self, prog: str = "braidtrace") -> argparse.ArgumentParser:
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--format", choices=("text", "json"), default="text")
        common.add_argument("--order", type=int, default=None,
                            help="expand rational functions as power series up to q^order")
        common.add_argument("--data-dir", dest="data_dir", default=None,
                            help="directory of Fourier table files")
        common.add_argument("--log-level", dest="log_level", default=None,
                            choices=("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"))

        parser = argparse.ArgumentParser(
            prog=prog,
            description="Exact decategorified braid invariants for Coxeter types A_n and I2(m)",
        )
        sub = parser.add_subparsers(dest="command", required=True, metavar="command")
        for command in self.commands.values():
            p = sub.add_parser(command.name, help=command.help, parents=[common])
            for option in command.options:
                flags, kwargs = OPTIONS[option]
                p.add_argument(*flags, **kwargs)
        return parser


router = CommandRouter()
