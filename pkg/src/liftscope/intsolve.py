"""Exact integer and rational root extraction for integer polynomials.

The core primitive is a monotone-interval scan: a superset of the floors of
the real critical points splits the line into pieces on which the polynomial
is strictly monotone (plus unit-length pieces whose integer endpoints are
checked directly); on a monotone piece an integer root is pinned down by
exact sign bisection.  No floating point is involved.

MonotoneSolver answers many queries "integer a with G(a) = w" against a fixed
G; this is the scalar workhorse of the brute-force census.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .arith import divisors, iroot


def int_eval(coeffs: list[int], x: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _derivative(coeffs: list[int]) -> list[int]:
    return [i * c for i, c in enumerate(coeffs)][1:]


def cauchy_bound(coeffs: list[int]) -> int:
    """Every real root r satisfies |r| < the returned integer."""
    lc = abs(coeffs[-1])
    m = max(abs(c) for c in coeffs[:-1]) if len(coeffs) > 1 else 0
    return 2 + m // lc + (1 if m % lc else 0)


def _sign_change_floor(coeffs: list[int], lo: int, hi: int, plo: int) -> int:
    """Floor of the unique root in (lo, hi), given a strict sign change."""
    while hi - lo > 1:
        mid = (lo + hi) // 2
        pm = int_eval(coeffs, mid)
        if pm == 0:
            return mid
        if (pm < 0) == (plo < 0):
            lo = mid
        else:
            hi = mid
    return lo


def grid_marks(coeffs: list[int]) -> list[int]:
    """A sorted superset of the floors of the real roots of the polynomial.

    Works for non-squarefree inputs: a multiple root is also a critical
    point, so it sits inside a unit interval that is reported wholesale.
    """
    coeffs = _trim(list(coeffs))
    deg = len(coeffs) - 1
    if deg <= 0:
        return []
    if deg == 1:
        return [(-coeffs[0]) // coeffs[1]]
    crit = grid_marks(_derivative(coeffs))
    bound = cauchy_bound(coeffs)
    pts = {-bound, bound}
    for c in crit:
        if -bound <= c <= bound:
            pts.add(c)
        if -bound <= c + 1 <= bound:
            pts.add(c + 1)
    pts = sorted(pts)
    crit_set = set(crit)
    marks: set[int] = set()
    vals = {a: int_eval(coeffs, a) for a in pts}
    for a, b in zip(pts, pts[1:]):
        pa, pb = vals[a], vals[b]
        if pa == 0:
            marks.add(a)
        if pb == 0:
            marks.add(b)
        if a in crit_set and b == a + 1:
            marks.add(a)  # unit interval around critical points: keep whole
            continue
        if (pa < 0 < pb) or (pb < 0 < pa):
            marks.add(_sign_change_floor(coeffs, a, b, pa))
    return sorted(marks)


def int_roots(coeffs: list[int]) -> list[int]:
    """All integer roots (distinct, sorted) of a nonzero integer polynomial."""
    coeffs = _trim(list(coeffs))
    if not coeffs:
        raise ValueError("integer roots of the zero polynomial")
    if len(coeffs) == 1:
        return []
    return sorted(a for a in grid_marks(coeffs) if int_eval(coeffs, a) == 0)


def rational_roots_int(coeffs: list[int]) -> list[tuple[Fraction, int]]:
    """Rational roots with multiplicities of a nonzero integer polynomial.

    Complete by the rational root theorem applied denominator-by-denominator:
    a/b in lowest terms is a root iff a is an integer root of b^m p(T/b).
    """
    coeffs = _trim(list(coeffs))
    if not coeffs:
        raise ValueError("rational roots of the zero polynomial")
    if len(coeffs) == 1:
        return []
    content = gcd(*coeffs)
    if content > 1:
        coeffs = [c // content for c in coeffs]
    m = len(coeffs) - 1
    found: set[Fraction] = set()
    for b in divisors(abs(coeffs[-1])):
        shifted = [c * b ** (m - i) for i, c in enumerate(coeffs)]
        for a in int_roots(shifted):
            if gcd(a, b) == 1:
                found.add(Fraction(a, b))
    out = []
    for r in sorted(found):
        mult = 0
        cur = [Fraction(c) for c in coeffs]
        while len(cur) > 1:
            quot, rem = _synthetic_div(cur, r)
            if rem != 0:
                break
            mult += 1
            cur = quot
        out.append((r, mult))
    return out


def _synthetic_div(coeffs: list[Fraction], r: Fraction) -> tuple[list[Fraction], Fraction]:
    """Divide by (x - r) over Q: returns (quotient, remainder)."""
    quot = [Fraction(0)] * (len(coeffs) - 1)
    acc = coeffs[-1]
    for i in range(len(coeffs) - 2, -1, -1):
        quot[i] = acc
        acc = acc * r + coeffs[i]
    return quot, acc


class MonotoneSolver:
    """Repeatedly solve G(a) = w over the integers for a fixed integer G.

    The critical-floor grid of G is precomputed once; each query costs a few
    exact bisections.  Pure powers (the common census shape) short-circuit
    through exact integer k-th roots.
    """

    def __init__(self, coeffs: list[int]):
        coeffs = _trim(list(coeffs))
        if len(coeffs) < 2:
            raise ValueError("solver needs degree >= 1")
        self.coeffs = coeffs
        self.deg = len(coeffs) - 1
        self.crit = grid_marks(_derivative(coeffs)) if self.deg >= 2 else []
        self.pure_power = all(c == 0 for c in coeffs[1:-1])

    def _bound(self, w: int) -> int:
        lc = abs(self.coeffs[-1])
        m = abs(self.coeffs[0] - w)
        for c in self.coeffs[1:-1]:
            if abs(c) > m:
                m = abs(c)
        return 2 + m // lc + (1 if m % lc else 0)

    def solve(self, w: int) -> list[int]:
        """Sorted distinct integers a with G(a) = w."""
        if self.pure_power:
            return self._solve_pure_power(w)
        coeffs = self.coeffs
        bound = self._bound(w)
        pts = {-bound, bound}
        for c in self.crit:
            if -bound <= c <= bound:
                pts.add(c)
            if -bound <= c + 1 <= bound:
                pts.add(c + 1)
        pts = sorted(pts)
        crit_set = set(self.crit)
        roots: set[int] = set()
        vals = {a: int_eval(coeffs, a) - w for a in pts}
        for a, b in zip(pts, pts[1:]):
            pa, pb = vals[a], vals[b]
            if pa == 0:
                roots.add(a)
            if pb == 0:
                roots.add(b)
            if a in crit_set and b == a + 1:
                continue
            if (pa < 0 < pb) or (pb < 0 < pa):
                lo, hi, plo = a, b, pa
                while hi - lo > 1:
                    mid = (lo + hi) // 2
                    pm = int_eval(coeffs, mid) - w
                    if pm == 0:
                        roots.add(mid)
                        break
                    if (pm < 0) == (plo < 0):
                        lo, plo = mid, pm
                    else:
                        hi = mid
        return sorted(roots)

    def _solve_pure_power(self, w: int) -> list[int]:
        lc, c0, m = self.coeffs[-1], self.coeffs[0], self.deg
        t = w - c0
        if t % lc:
            return []
        t //= lc
        if t == 0:
            return [0]
        if m % 2 == 0:
            if t < 0:
                return []
            r, exact = iroot(t, m)
            return [-r, r] if exact else []
        r, exact = iroot(abs(t), m)
        if not exact:
            return []
        return [r if t > 0 else -r]
