"""liftscope: exact analysis of rational lifts through g on values of f.

Given nonconstant f, g in Q[x], the package factors the separated curve
f(X) - g(Y) = 0, strips the polynomial graph components Y = h(X) with
f = g o h, classifies what remains (Siegel-finite / one point at infinity /
two points at infinity), decides arithmetic activity of each polynomial
X-parametrization, predicts the growth exponent of the count of integer
inputs with a new rational lift, and verifies the prediction by brute force.
"""

from fractions import Fraction

from .poly import NEG_INF, Poly, compose, poly_gcd
from .bipoly import Poly2, discriminant_y, poly2_to_str, resultant_y, squarefree_part

__version__ = "0.1.0"

__all__ = [
    "Fraction",
    "NEG_INF",
    "Poly",
    "Poly2",
    "compose",
    "poly_gcd",
    "resultant_y",
    "discriminant_y",
    "squarefree_part",
    "poly2_to_str",
]
