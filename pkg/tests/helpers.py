"""Shared test utilities: parsing shorthand and independent oracles.

The oracles here are deliberately naive (Sylvester determinants by cofactor
expansion, direct enumeration) so they are independent of the library's own
algorithms.
"""

from fractions import Fraction

from liftscope.poly import Poly
from liftscope.bipoly import Poly2

F = Fraction


def P(*coeffs) -> Poly:
    """Poly from ascending coefficients, e.g. P(1, 0, 1) = 1 + x^2."""
    return Poly([F(c) if not isinstance(c, F) else c for c in coeffs])


def P2(rows) -> Poly2:
    """Poly2 from ascending Y-major rows of ascending X-coefficients."""
    return Poly2([Poly([F(c) for c in row]) for row in rows])


X = P(0, 1)

T2 = P(-1, 0, 2)  # 2z^2 - 1
T3 = P(0, -3, 0, 4)  # 4z^3 - 3z


def det_fraction_free(mat):
    """Determinant by cofactor expansion; entries support +,-,*.

    Exponential, fine for the small Sylvester matrices used as oracles.
    """
    n = len(mat)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return mat[0][0]
    total = None
    for j in range(n):
        entry = mat[0][j]
        minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
        term = entry * det_fraction_free(minor)
        if j % 2 == 1:
            term = -term
        total = term if total is None else total + term
    return total


def sylvester_resultant_ascending(p: Poly2, q: Poly2) -> Poly:
    """Oracle: determinant of the ascending-coefficient Sylvester matrix in Y.

    Row layout: deg(q) shifted copies of p's ascending Y-coefficients, then
    deg(p) shifted copies of q's.  Entries are polynomials in X.
    """
    m, n = p.deg_y, q.deg_y
    size = m + n
    zero = Poly.zero()
    rows = []
    pc = [p[j] for j in range(m + 1)]
    qc = [q[j] for j in range(n + 1)]
    for i in range(n):
        rows.append([zero] * i + pc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + qc + [zero] * (size - n - 1 - i))
    return det_fraction_free(rows)


def random_poly(rng, degree, coeff_bound=9, monic=False, denominators=(1,)):
    """Random Poly of exact degree `degree` with small coefficients."""
    while True:
        coeffs = [
            Fraction(rng.randint(-coeff_bound, coeff_bound), rng.choice(denominators))
            for _ in range(degree + 1)
        ]
        if monic:
            coeffs[-1] = Fraction(1)
        elif coeffs[-1] == 0:
            continue
        return Poly(coeffs)
