import sys
from typing import List, Optional

from braidtrace.cli import commands  # noqa: F401  (registers the handlers)
from braidtrace.cli.render import dump_json
from braidtrace.cli.router import router
from braidtrace.core.config import settings
from braidtrace.core.exceptions import BraidTraceException, ValidationError, exit_code_for
from braidtrace.core.logger import logger, set_level

SIGNED_OPTIONS = ("--slope", "--braid")


def _join_signed_values(argv: List[str]) -> List[str]:
    """Rewrite `--slope -3/2` as `--slope=-3/2` so argparse does not read the value as a flag"""
    out: List[str] = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token in SIGNED_OPTIONS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
            continue
        out.append(token)
        i += 1
    return out


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, dispatch to a command and print its output; returns the exit code"""
    parser = router.build_parser()
    try:
        args = parser.parse_args(_join_signed_values(sys.argv[1:] if argv is None else list(argv)))
    except SystemExit as e:
        return int(e.code or 0)

    if args.log_level:
        set_level(args.log_level)
    if args.data_dir:
        settings.DATA_DIR = args.data_dir

    command = router.commands[args.command]
    logger.info(f"Running {command.name}")
    try:
        result = command.handler(args)
    except (BraidTraceException, AssertionError) as e:
        message = e.message if isinstance(e, BraidTraceException) else str(e) or "assertion failed"
        details = e.details if isinstance(e, BraidTraceException) else {}
        code = exit_code_for(e)
        log = logger.debug if isinstance(e, ValidationError) else logger.error
        log(f"{command.name} failed: {message}")
        print(f"error: {message}", file=sys.stderr)
        if details:
            print(dump_json({k: str(v) for k, v in details.items()}), file=sys.stderr)
        return code
    except Exception as e:
        logger.exception(f"Unexpected error in {command.name}: {e}")
        return exit_code_for(e)

    print(dump_json(result.data) if args.format == "json" else result.text)
    return result.exit_code


def main() -> None:
    sys.exit(run())
