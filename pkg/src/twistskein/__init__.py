"""Exact Kauffman bracket computations in the solid torus.

Covers the coefficients of the series omega^p (two independent formulas),
the product bases R_n and S_n, and colored Jones polynomials of twist knots
checked against a state sum.
"""

from .habiro import OmegaCoefficients, c_np, c_prime, omega_pairing_check
from .jones import colored_jones, colored_jones_qform, kauffman_oracle, twist_knot_diagram
from .laurent import A, LaurentPoly, a_pow, qbinom, qbrace, qint
from .skein import Basis, SkeinElement, basis_element, bracket, pairing, twist

__version__ = "0.1.0"
