"""Exact computations for the Temperley-Lieb algebra at beta = 0."""

__version__ = "0.1.0"
