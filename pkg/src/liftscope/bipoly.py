"""Dense bivariate polynomials over Q, stored Y-major.

A Poly2 is a tuple of Poly-in-X coefficients indexed by Y-exponent.  This is
the natural shape for separated inputs f(X) - g(Y), whose leading coefficient
in Y is the nonzero constant -lc(g).

The resultant uses the subresultant PRS (Cohen's algorithm) with exact
divisions in Q[X], checked in the tests against a Sylvester-determinant
oracle.  `resultant_y` follows the ascending-coefficient Sylvester sign
convention, e.g. Res_Y(X - Y, X + Y) = 2X.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable

from .poly import NEG_INF, Poly, Scalar, _frac


def _as_poly(c) -> Poly:
    if isinstance(c, Poly):
        return c
    return Poly.constant(c)


class Poly2:
    """A polynomial in X and Y over the rationals; coeffs[j] multiplies Y^j."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_poly(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Poly2 is immutable")

    # -- construction -----------------------------------------------------------

    @staticmethod
    def zero() -> Poly2:
        return Poly2()

    @staticmethod
    def one() -> Poly2:
        return Poly2([Poly.one()])

    @staticmethod
    def from_x(p: Poly) -> Poly2:
        return Poly2([p])

    @staticmethod
    def y_minus(h: Poly) -> Poly2:
        """The graph polynomial Y - h(X)."""
        return Poly2([-h, Poly.one()])

    @staticmethod
    def separated(f: Poly, g: Poly) -> Poly2:
        """f(X) - g(Y)."""
        coeffs = [f - Poly.constant(g[0])]
        for j in range(1, len(g.coeffs)):
            coeffs.append(Poly.constant(-g[j]))
        return Poly2(coeffs)

    # -- structure ---------------------------------------------------------------

    @property
    def deg_y(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def deg_x(self):
        if not self.coeffs:
            return NEG_INF
        return max(c.degree for c in self.coeffs if not c.is_zero())

    @property
    def total_degree(self):
        if not self.coeffs:
            return NEG_INF
        return max(j + c.degree for j, c in enumerate(self.coeffs) if not c.is_zero())

    @property
    def lc_y(self) -> Poly:
        if not self.coeffs:
            raise ValueError("leading coefficient of zero polynomial")
        return self.coeffs[-1]

    def coefficient(self, i: int, j: int) -> Fraction:
        """Coefficient of X^i Y^j."""
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j][i]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return self.deg_y <= 0 and self.deg_x <= 0

    def __getitem__(self, j: int) -> Poly:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return Poly.zero()

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly2) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic ----------------------------------------------------------------

    def __add__(self, other: Poly2) -> Poly2:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for j, c in enumerate(b):
            out[j] = out[j] + c
        return Poly2(out)

    def __neg__(self) -> Poly2:
        return Poly2([-c for c in self.coeffs])

    def __sub__(self, other: Poly2) -> Poly2:
        return self + (-other)

    def __mul__(self, other) -> Poly2:
        if isinstance(other, Poly2):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return Poly2()
            out = [Poly.zero()] * (len(a) + len(b) - 1)
            for i, ai in enumerate(a):
                if not ai.is_zero():
                    for j, bj in enumerate(b):
                        out[i + j] = out[i + j] + ai * bj
            return Poly2(out)
        if isinstance(other, Poly):
            return Poly2([c * other for c in self.coeffs])
        return Poly2([c * _frac(other) for c in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly2:
        if n < 0:
            raise ValueError("negative power")
        result = Poly2.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- substitution -----------------------------------------------------------------

    def subst_x(self, x0: Scalar) -> Poly:
        """Specialize X = x0, giving a polynomial in Y."""
        return Poly([c(x0) for c in self.coeffs])

    def subst_y(self, y0: Scalar) -> Poly:
        """Specialize Y = y0, giving a polynomial in X."""
        y0 = _frac(y0)
        acc = Poly.zero()
        for c in reversed(self.coeffs):
            acc = acc * y0 + c
        return acc

    def subst_y_poly(self, h: Poly) -> Poly:
        """Substitute Y = h(X), giving a polynomial in X."""
        acc = Poly.zero()
        for c in reversed(self.coeffs):
            acc = acc * h + c
        return acc

    def eval(self, x0: Scalar, y0: Scalar) -> Fraction:
        return self.subst_x(x0)(y0)

    def derivative_y(self) -> Poly2:
        return Poly2([j * c for j, c in enumerate(self.coeffs)][1:])

    def transpose(self) -> Poly2:
        """Swap the roles of X and Y."""
        if not self.coeffs:
            return self
        dx = max(len(c.coeffs) for c in self.coeffs)
        rows = [[Fraction(0)] * len(self.coeffs) for _ in range(dx)]
        for j, c in enumerate(self.coeffs):
            for i, v in enumerate(c.coeffs):
                rows[i][j] = v
        return Poly2([Poly(r) for r in rows])

    # -- division ------------------------------------------------------------------------

    def divmod_y(self, other: Poly2) -> tuple[Poly2, Poly2]:
        """Division in (Q[X])[Y]; fails unless every coefficient division is exact."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        d = other.deg_y
        lead = other.lc_y
        rem = list(self.coeffs)
        qlen = max(len(rem) - d, 0)
        quot = [Poly.zero()] * qlen
        for i in range(len(rem) - 1, d - 1, -1):
            top = rem[i]
            if top.is_zero():
                continue
            q = top.exact_div(lead)  # raises ValueError when not exact
            quot[i - d] = q
            for j, oc in enumerate(other.coeffs):
                rem[i - d + j] = rem[i - d + j] - q * oc
        return Poly2(quot), Poly2(rem)

    def exact_div(self, other: Poly2) -> Poly2:
        q, r = self.divmod_y(other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def divides(self, other: Poly2) -> bool:
        if self.is_zero():
            return other.is_zero()
        try:
            q, r = other.divmod_y(self)
        except ValueError:
            return False
        return r.is_zero()

    def pseudo_rem_y(self, other: Poly2) -> Poly2:
        """prem in Y: lc(other)^(deg self - deg other + 1) * self mod other."""
        if other.is_zero():
            raise ZeroDivisionError("pseudo-division by zero")
        rem = list(self.coeffs)
        db = other.deg_y
        lb = other.lc_y
        e = len(rem) - 1 - db + 1
        while rem and len(rem) - 1 >= db:
            la = rem[-1]
            shift = len(rem) - 1 - db
            rem = [c * lb for c in rem]
            for j, oc in enumerate(other.coeffs):
                rem[shift + j] = rem[shift + j] - la * oc
            while rem and rem[-1].is_zero():
                rem.pop()
            e -= 1
        if e > 0:
            lbe = lb**e
            rem = [c * lbe for c in rem]
        return Poly2(rem)

    # -- content, primitive parts, canonical form ---------------------------------------

    def content_y(self) -> Poly:
        """Monic gcd in Q[X] of the Y-coefficients."""
        cont = Poly.zero()
        for c in self.coeffs:
            if c.is_zero():
                continue
            cont = c.monic() if cont.is_zero() else cont.gcd(c)
            if cont.is_constant():
                return Poly.one()
        return cont if not cont.is_zero() else Poly.zero()

    def primitive_y(self) -> tuple[Poly, Poly2]:
        """(content, pp) with self = content * pp and pp primitive in Y."""
        if self.is_zero():
            return Poly.zero(), Poly2.zero()
        cont = self.content_y()
        if cont.is_constant():
            return Poly.one(), self
        return cont, Poly2([c.exact_div(cont) for c in self.coeffs])

    def canonical(self) -> tuple[Fraction, Poly2]:
        """(unit, prim): prim has coprime integer coefficients, positive leading
        coefficient (leading in Y, then in X), and self = unit * prim."""
        if self.is_zero():
            return Fraction(0), Poly2.zero()
        den = lcm(*(c.denominator for p in self.coeffs for c in p.coeffs))
        num = gcd(*(c.numerator for p in self.coeffs for c in p.coeffs))
        unit = Fraction(num, den)
        if self.lc_y.lc < 0:
            unit = -unit
        inv = 1 / unit
        return unit, Poly2([c * inv for c in self.coeffs])

    def sort_key(self):
        """(total degree, Y-degree, coefficients from the top): a total order."""
        return (
            self.total_degree if self.coeffs else -1,
            len(self.coeffs),
            tuple(tuple(reversed(c.coeffs)) for c in reversed(self.coeffs)),
        )

    # -- gcd, resultant, squarefree part --------------------------------------------------

    def gcd_y(self, other: Poly2) -> Poly2:
        """A gcd in Q[X,Y] (primitive PRS in Y; unit-normalized via canonical())."""
        if self.is_zero():
            return other.canonical()[1]
        if other.is_zero():
            return self.canonical()[1]
        cont_a, pa = self.primitive_y()
        cont_b, pb = other.primitive_y()
        cont_g = cont_a.gcd(cont_b)
        a, b = pa, pb
        if a.deg_y < b.deg_y:
            a, b = b, a
        while not b.is_zero():
            if b.deg_y == 0:
                a = Poly2.one()
                b = Poly2.zero()
                break
            r = a.pseudo_rem_y(b)
            a, b = b, r.primitive_y()[1]
        g = a.primitive_y()[1] * cont_g
        return g.canonical()[1]

    def resultant_std(self, other: Poly2) -> Poly:
        """Res_Y in the standard (descending Sylvester) convention, in Q[X]."""
        if self.is_zero() or other.is_zero():
            return Poly.zero()
        a, b = self, other
        m, n = a.deg_y, b.deg_y
        s = 1
        if m < n:
            a, b = b, a
            if (m * n) % 2 == 1:
                s = -1
        if b.deg_y == 0:
            return s * b[0] ** a.deg_y if a.deg_y > 0 else Poly.one() * s
        g = Poly.one()
        h = Poly.one()
        while True:
            da, db = a.deg_y, b.deg_y
            delta = da - db
            if da % 2 == 1 and db % 2 == 1:
                s = -s
            r = a.pseudo_rem_y(b)
            a = b
            denom = g * h**delta
            if r.is_zero():
                return Poly.zero()
            b = Poly2([c.exact_div(denom) for c in r.coeffs])
            g = a.lc_y
            if delta > 0:
                h = (g**delta).exact_div(h ** (delta - 1))
            if b.deg_y == 0:
                break
        da = a.deg_y
        res = (b[0] ** da).exact_div(h ** (da - 1)) if da > 1 else b[0] ** da
        return res * s if s == 1 else -res


def resultant_y(p: Poly2, q: Poly2) -> Poly:
    """Resultant with respect to Y, ascending-coefficient Sylvester convention.

    Vanishes at x exactly when the specializations at X = x share a root over
    the algebraic closure or both drop Y-degree.
    """
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of zero polynomial")
    m, n = p.deg_y, q.deg_y
    if m < 1 or n < 1:
        raise ValueError("resultant needs positive Y-degree")
    big_n = m + n
    sigma = (big_n * (big_n - 1) + m * (m - 1) + n * (n - 1)) // 2
    r = p.resultant_std(q)
    return -r if sigma % 2 else r


def discriminant_y(p: Poly2) -> Poly:
    """disc_Y(p) = (-1)^(n(n-1)/2) Res_Y(p, dp/dY) / lc_Y(p), in Q[X]."""
    n = p.deg_y
    if n is NEG_INF or n < 1:
        raise ValueError("discriminant needs positive Y-degree")
    r = p.resultant_std(p.derivative_y())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    out = Poly([c / 1 for c in r.coeffs])
    lead = p.lc_y
    return (out * sign).exact_div(lead)


def squarefree_part(p: Poly2) -> Poly2:
    """Product of the distinct irreducible factors of p, canonically normalized.

    Splits off the X-only content first; repeated factors involving Y are then
    exactly the gcd with the Y-derivative.
    """
    if p.is_zero():
        raise ValueError("squarefree part of zero")
    if p.deg_y <= 0:
        return Poly2.from_x(p[0].squarefree_part()).canonical()[1]
    cont, pp = p.primitive_y()
    out = Poly2.one()
    if not cont.is_constant():
        out = Poly2.from_x(cont.squarefree_part())
    g = pp.gcd_y(pp.derivative_y())
    if g.deg_y == 0 and g.deg_x == 0:
        out = out * pp
    else:
        out = out * pp.exact_div(g)
    return out.canonical()[1]


# -- rendering -----------------------------------------------------------------------


def poly2_to_str(p: Poly2, varx: str = "x", vary: str = "y") -> str:
    """Human-readable form, highest Y-power first."""
    if p.is_zero():
        return "0"
    terms = []
    for j in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[j]
        for i in range(len(c.coeffs) - 1, -1, -1):
            v = c.coeffs[i]
            if v == 0:
                continue
            mag = abs(v)
            parts = []
            if mag != 1 or (i == 0 and j == 0):
                parts.append(
                    str(mag.numerator)
                    if mag.denominator == 1
                    else f"{mag.numerator}/{mag.denominator}"
                )
            if i == 1:
                parts.append(varx)
            elif i > 1:
                parts.append(f"{varx}^{i}")
            if j == 1:
                parts.append(vary)
            elif j > 1:
                parts.append(f"{vary}^{j}")
            body = "*".join(parts)
            if not terms:
                terms.append(body if v > 0 else f"-{body}")
            else:
                terms.append(f" + {body}" if v > 0 else f" - {body}")
    return "".join(terms)
