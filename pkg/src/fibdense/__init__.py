"""Fibonacci words: exact symbol densities, complexity statistics and generating functions."""
from . import density, fibword, genfunc, sequences, wordstats
from .errors import FibDenseError

__version__ = "0.1.0"

__all__ = ["density", "fibword", "genfunc", "sequences", "wordstats", "FibDenseError", "__version__"]
