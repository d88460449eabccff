"""Exact computation and verification for the central binomial series at
non-positive integers, Lehmer's p/q polynomials, bivariate Eulerian
polynomials and antidiagonal sums of poly-Bernoulli numbers."""

from .exact import BiPoly, Poly, Rat, Series
from .lehmer import ZetaValue, a_seq, pq_polys, zeta_cb_neg
from .polybernoulli import b_sum

__all__ = ["BiPoly", "Poly", "Rat", "Series", "ZetaValue", "a_seq", "b_sum", "pq_polys", "zeta_cb_neg"]
__version__ = "0.1.0"
