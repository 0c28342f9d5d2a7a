"""Dense univariate polynomials with exact rational coefficients.

Coefficients are `fractions.Fraction`, stored ascending by exponent with no
trailing zeros, so equal polynomials compare equal.  The zero polynomial has
degree NEG_INF (a genuine -infinity marker, never -1), which keeps degree
arithmetic total: deg(p*q) = deg p + deg q holds for every pair.

Values are immutable; every operation returns a new Poly.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Union

NEG_INF = float("-inf")

Scalar = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


class Poly:
    """A polynomial in one variable over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def zero() -> Poly:
        return Poly()

    @staticmethod
    def one() -> Poly:
        return Poly([1])

    @staticmethod
    def x(power: int = 1) -> Poly:
        return Poly([0] * power + [1])

    @staticmethod
    def constant(c: Scalar) -> Poly:
        return Poly([c])

    @staticmethod
    def monomial(c: Scalar, power: int) -> Poly:
        return Poly([0] * power + [c])

    # -- basic structure -----------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("leading coefficient of zero polynomial")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # -- ring operations -----------------------------------------------------

    def __add__(self, other) -> Poly:
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> Poly:
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return self + (-other)

    def __rsub__(self, other) -> Poly:
        return Poly.constant(other) - self

    def __mul__(self, other) -> Poly:
        if not isinstance(other, Poly):
            c = _frac(other)
            return Poly([c * a for a in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative power")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        quot = [Fraction(0)] * max(len(rem) - d, 0)
        inv_lc = 1 / other.lc
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = c * inv_lc
            quot[i - d] = q
            for j, oc in enumerate(other.coeffs):
                rem[i - d + j] -= q * oc
        return Poly(quot), Poly(rem)

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def exact_div(self, other: Poly) -> Poly:
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    def divides(self, other: Poly) -> bool:
        if self.is_zero():
            return other.is_zero()
        return divmod(other, self)[1].is_zero()

    # -- evaluation and composition -------------------------------------------

    def __call__(self, x):
        """Evaluate by Horner.  x may be a scalar or another Poly (composition)."""
        if isinstance(x, Poly):
            acc = Poly()
            for c in reversed(self.coeffs):
                acc = acc * x + Poly.constant(c)
            return acc
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: Poly) -> Poly:
        return self(inner)

    def derivative(self) -> Poly:
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def taylor_shift(self, t0: Scalar) -> Poly:
        """Coefficients of p(t0 + Z) as a polynomial in Z."""
        t0 = _frac(t0)
        acc = Poly()
        z_plus = Poly([t0, 1])
        for c in reversed(self.coeffs):
            acc = acc * z_plus + Poly.constant(c)
        return acc

    # -- content and normal forms ---------------------------------------------

    def content_primitive(self) -> tuple[Fraction, Poly]:
        """(c, q) with self = c*q, q primitive over Z with positive lc."""
        if self.is_zero():
            return Fraction(0), Poly()
        den = lcm(*(c.denominator for c in self.coeffs))
        num = gcd(*(c.numerator for c in self.coeffs))
        content = Fraction(num, den)
        if self.lc < 0:
            content = -content
        return content, self * (1 / content)

    def primitive(self) -> Poly:
        return self.content_primitive()[1]

    def int_coeffs(self) -> list[int]:
        """Coefficient list as ints; raises if any coefficient is non-integral."""
        out = []
        for c in self.coeffs:
            if c.denominator != 1:
                raise ValueError("non-integer coefficient")
            out.append(c.numerator)
        return out

    def monic(self) -> Poly:
        if self.is_zero():
            return self
        return self * (1 / self.lc)

    def denominator_lcm(self) -> int:
        if self.is_zero():
            return 1
        return lcm(*(c.denominator for c in self.coeffs))

    def sort_key(self):
        """Deterministic total order: degree, then coefficients from the top."""
        return (len(self.coeffs), tuple(reversed(self.coeffs)))

    # -- gcd and squarefree structure -------------------------------------------

    def gcd(self, other: Poly) -> Poly:
        """Monic gcd over Q (primitive PRS over Z to control blowup)."""
        if self.is_zero() and other.is_zero():
            raise ValueError("gcd(0, 0)")
        if self.is_zero():
            return other.monic()
        if other.is_zero():
            return self.monic()
        a = self.primitive().int_coeffs()
        b = other.primitive().int_coeffs()
        return Poly(_int_prs_gcd(a, b)).monic()

    def resultant(self, other: Poly) -> Fraction:
        """Resultant of two univariate polynomials (standard convention)."""
        from .bipoly import Poly2

        if self.is_zero() or other.is_zero():
            return Fraction(0)
        p2 = Poly2([Poly([c]) for c in self.coeffs])
        q2 = Poly2([Poly([c]) for c in other.coeffs])
        r = p2.resultant_std(q2)
        return r[0]

    def discriminant(self) -> Fraction:
        """disc(p) = (-1)^(d(d-1)/2) Res(p, p') / lc(p)."""
        d = self.degree
        if d is NEG_INF or d < 1:
            raise ValueError("discriminant needs degree >= 1")
        sign = -1 if (d * (d - 1) // 2) % 2 else 1
        return sign * self.resultant(self.derivative()) / self.lc

    def squarefree_decomposition(self) -> tuple[Fraction, list[tuple[Poly, int]]]:
        """Yun's algorithm: self = unit * prod a_i^i, a_i squarefree and coprime.

        Parts are primitive over Z with positive leading coefficient; the
        reassembled product is verified exactly before returning.
        """
        if self.is_zero():
            raise ValueError("squarefree decomposition of zero")
        if self.is_constant():
            return self[0], []
        unit = self.lc
        p = self.monic()
        parts: list[tuple[Poly, int]] = []
        dp = p.derivative()
        g = p.gcd(dp)
        c = p.exact_div(g)
        d = dp.exact_div(g) - c.derivative()
        i = 1
        while not c.is_constant():
            if i > len(self.coeffs):
                raise ArithmeticError("Yun iteration did not terminate")
            a = c.gcd(d) if not d.is_zero() else c.monic()
            if not a.is_constant():
                cont, prim = a.content_primitive()
                parts.append((prim, i))
                unit *= cont**i
            c = c.exact_div(a)
            d = d.exact_div(a) - c.derivative()
            i += 1
        prod = Poly.constant(unit)
        for q, k in parts:
            prod = prod * q**k
        if prod != self:
            raise ArithmeticError("squarefree decomposition inconsistency")
        return unit, parts

    def squarefree_part(self) -> Poly:
        """Product of the distinct irreducible factors (primitive, positive lc)."""
        _, parts = self.squarefree_decomposition()
        out = Poly.one()
        for q, _ in parts:
            out = out * q
        return out.primitive()

    # -- printing ---------------------------------------------------------------

    def to_str(self, var: str = "x") -> str:
        """Render in the expression grammar (round-trips through parse_poly)."""
        if self.is_zero():
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = _frac_str(mag)
            elif i == 1:
                body = var if mag == 1 else f"{_frac_str(mag)}*{var}"
            else:
                body = f"{var}^{i}" if mag == 1 else f"{_frac_str(mag)}*{var}^{i}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(terms)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Poly({self.to_str()!r})"


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# -- integer PRS helpers --------------------------------------------------------


def _int_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _int_primitive(a: list[int]) -> list[int]:
    c = gcd(*a) if len(a) > 1 else abs(a[0]) if a else 0
    if c in (0, 1):
        return list(a)
    return [x // c for x in a]


def _int_pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b over Z (b nonzero, deg a >= deg b)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while a and len(a) - 1 >= db:
        la = a[-1]
        shift = len(a) - 1 - db
        a = [c * lb for c in a]
        for j, bc in enumerate(b):
            a[shift + j] -= la * bc
        _int_trim(a)
    return a


def _int_prs_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive PRS gcd in Z[x]; result primitive with positive lc."""
    a, b = _int_trim(list(a)), _int_trim(list(b))
    if len(a) < len(b):
        a, b = b, a
    while b:
        if len(b) == 1:
            return [1]
        r = _int_pseudo_rem(a, b)
        a, b = b, _int_primitive(r)
    g = _int_primitive(a)
    if g and g[-1] < 0:
        g = [-c for c in g]
    return g


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor; divides both inputs exactly."""
    return p.gcd(q)


def compose(outer: Poly, inner: Poly) -> Poly:
    """Functional composition outer(inner(x))."""
    return outer(inner)
