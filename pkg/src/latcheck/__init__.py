"""latcheck: exact checks of disjointness preservation and width monotonicity.

Finite rational vector-lattice models (coordinate vectors, piecewise-linear
functions, germ-sum triples), exact operator algebra, decision procedures
with machine-checkable certificates, independent brute-force oracles, and
seeded counterexample search.
"""

from latcheck.regions import Interval, Region, closed, openiv, point, rat, rat_str

__all__ = [
    "Interval",
    "Region",
    "closed",
    "openiv",
    "point",
    "rat",
    "rat_str",
]
