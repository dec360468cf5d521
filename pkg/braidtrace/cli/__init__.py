from braidtrace.cli.main import main, run

__all__ = ["main", "run"]
