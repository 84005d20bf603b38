"""Exact computations with plane point sets: Groebner bases, Hilbert functions, liaison and apolarity."""

__version__ = "0.1.0"
