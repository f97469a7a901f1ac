"""Shared store for acceptance outcomes, printed at the end of the run."""

RESULTS = {}
