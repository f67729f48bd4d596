"""Exact lattice-point counts on weighted rational triangles.

The heavy lifting lives in the C++ extension; this package re-exports it.
Integers are ordinary Python ints (arbitrary precision end to end) and
exact rationals are fractions.Fraction.
"""

from ._wptri import *  # noqa: F401,F403

__version__ = "0.1.0"
