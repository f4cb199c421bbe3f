"""Jacobi permutations: pattern avoidance, statistics, and exact verification.

A permutation here is a word of pairwise-distinct positive integers,
represented as a tuple. A permutation is *Jacobi* when, for every letter x,
the maximal run of letters immediately to its right that are all larger
than x has even length. Jacobi permutations of [n] are counted by the
Euler numbers (the coefficients of sec x + tan x).

Submodules:

- ``perms``       -- permutation words, Jacobi tests, patterns, statistics
- ``enumeration`` -- exhaustive and direct generation of permutation classes
- ``trees``       -- binary/ternary tree models and tree bijections
- ``dyck``        -- Dyck paths and the 123-avoider correspondence
- ``formulas``    -- exact closed forms for all counts and distributions
- ``series``      -- truncated multivariate power series over the rationals
- ``tables``      -- registry of reference tables and their verification
- ``conjectures`` -- enumeration harness for the open conjectures
- ``cli``         -- the ``jacobiperm`` command-line interface
"""

from jacobiperm.errors import GuardError
from jacobiperm.perms import (
    is_jacobi,
    is_r_jacobi,
    standardize,
    complement,
    inverse,
    contains_pattern,
    avoids,
)

__all__ = [
    "GuardError",
    "is_jacobi",
    "is_r_jacobi",
    "standardize",
    "complement",
    "inverse",
    "contains_pattern",
    "avoids",
]

__version__ = "0.1.0"
