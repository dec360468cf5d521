"""Exact decategorified braid invariants for Coxeter types A_n and I2(m)."""

__version__ = "0.1.0"
