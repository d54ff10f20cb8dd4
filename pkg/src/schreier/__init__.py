"""Counting Schreier subsets of {k, 2k, ..., nk} three ways: by brute force,
by binomial sums, and by linear recurrence."""
from .core import (Family, IntPolynomial, SequenceId, SubsetWitness, binomial,
                   floor_div, poly_add, poly_divides, poly_mul)
from .recurrence import sequence_terms

__version__ = "0.1.0"
