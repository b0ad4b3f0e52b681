"""Exact scaling analysis and fractional-power-series expansion of equation models.

The package is organised in layers:

* ``exact``      -- arbitrary-precision integer matrices (Hermite form, kernels).
* ``poly``       -- Laurent polynomials over rationals with parameter monomials.
* ``groebner``   -- Buchberger bases, elimination, saturation, toric ideals.
* ``dimension``  -- homogeneity checks, constant-dimension inference, scaling
                    groups and non-dimensionalisation.
* ``polytope``   -- Newton polytopes, Kruskal point sets, distinguished facets.
* ``expand``     -- Puiseux series and the polynomial facet-expansion loop.
* ``diffexpand`` -- the differential extension (rescaling, facet ODE split,
                    power-law facet solutions, restricted iteration).
* ``dsl`` / ``cli`` -- the equation file format and the command line tool.
"""

from npbalance.exact import IntMatrix, hermite_normal_form, integer_kernel, primitive

__all__ = [
    "IntMatrix",
    "hermite_normal_form",
    "integer_kernel",
    "primitive",
]
