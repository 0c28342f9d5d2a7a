import random
from fractions import Fraction

import pytest

from liftscope.poly import Poly
from liftscope.bipoly import (
    Poly2,
    discriminant_y,
    poly2_to_str,
    resultant_y,
    squarefree_part,
)

from helpers import (
    P,
    P2,
    T2,
    T3,
    random_poly,
    sylvester_resultant_ascending,
)

F = Fraction

X_MINUS_Y = P2([[0, 1], [-1]])  # X - Y
X_PLUS_Y = P2([[0, 1], [1]])  # X + Y
X2_PLUS_Y2 = P2([[0, 0, 1], [], [1]])  # X^2 + Y^2


def separated(f, g):
    return Poly2.separated(f, g)


class TestStructure:
    def test_separated_shape(self):
        p = separated(P(0, 0, 0, 0, 1), P(0, 0, 0, 0, 1))  # X^4 - Y^4
        assert p.deg_y == 4
        assert p.lc_y == P(-1)  # constant -lc(g)
        assert p.subst_x(2) == P(16, 0, 0, 0, -1)

    def test_eval(self):
        p = X2_PLUS_Y2
        assert p.eval(F(1, 2), F(1, 3)) == F(1, 4) + F(1, 9)

    def test_transpose_involution(self):
        rng = random.Random(11)
        for _ in range(20):
            p = _random_poly2(rng)
            assert p.transpose().transpose() == p
            assert p.transpose().deg_y == p.deg_x

    def test_mul_matches_eval(self):
        rng = random.Random(12)
        for _ in range(20):
            p, q = _random_poly2(rng), _random_poly2(rng)
            x, y = F(rng.randint(-5, 5)), F(rng.randint(-5, 5))
            assert (p * q).eval(x, y) == p.eval(x, y) * q.eval(x, y)


def _random_poly2(rng, dy=None, dx=None):
    dy = rng.randint(0, 3) if dy is None else dy
    dx = rng.randint(0, 3) if dx is None else dx
    rows = []
    for j in range(dy + 1):
        rows.append([rng.randint(-5, 5) for _ in range(dx + 1)])
    if all(c == 0 for row in rows for c in row):
        rows[-1][-1] = 1
    if all(c == 0 for c in rows[-1]):
        rows[-1][0] = 1
    return P2(rows)


class TestDivision:
    def test_divmod_roundtrip(self):
        rng = random.Random(13)
        for _ in range(30):
            q = _random_poly2(rng, dy=rng.randint(1, 2))
            p = _random_poly2(rng, dy=rng.randint(1, 3))
            prod = p * q
            assert prod.exact_div(q) == p
            assert q.divides(prod)

    def test_divides_negative(self):
        assert not X_MINUS_Y.divides(X2_PLUS_Y2)

    def test_pseudo_rem_degree_drop(self):
        rng = random.Random(14)
        for _ in range(30):
            a = _random_poly2(rng, dy=3)
            b = _random_poly2(rng, dy=2)
            r = a.pseudo_rem_y(b)
            assert r.is_zero() or r.deg_y < b.deg_y


class TestResultant:
    def test_frozen_linear_pair(self):
        assert resultant_y(X_MINUS_Y, X_PLUS_Y) == P(0, 2)  # 2X

    def test_frozen_mixed_pair(self):
        assert resultant_y(X_MINUS_Y, X2_PLUS_Y2) == P(0, 0, 2)  # 2X^2

    def test_equal_inputs_vanish(self):
        p = Poly2.y_minus(P(1, 2, 3))
        assert p.resultant_std(p).is_zero()

    def test_graph_pair(self):
        # Res_Y(Y - h1, Y + h1-like) for the ((X^2+1)^2, Y^2) example
        h1 = P(1, 0, 1)
        r = resultant_y(Poly2.y_minus(h1), Poly2.y_minus(-h1))
        assert r == P(-2, 0, -2)  # -2(X^2 + 1)

    def test_against_sylvester_oracle(self):
        rng = random.Random(15)
        for _ in range(40):
            p = _random_poly2(rng, dy=rng.randint(1, 3), dx=rng.randint(0, 2))
            q = _random_poly2(rng, dy=rng.randint(1, 3), dx=rng.randint(0, 2))
            assert resultant_y(p, q) == sylvester_resultant_ascending(p, q)

    def test_specialization_property(self):
        rng = random.Random(16)
        checked = 0
        while checked < 25:
            p = _random_poly2(rng, dy=rng.randint(1, 3))
            q = _random_poly2(rng, dy=rng.randint(1, 3))
            x = F(rng.randint(-6, 6), rng.randint(1, 3))
            ps, qs = p.subst_x(x), q.subst_x(x)
            if ps.degree != p.deg_y or qs.degree != q.deg_y:
                continue
            lhs = resultant_y(p, q)(x)
            sign = _ascending_sign(p.deg_y, q.deg_y)
            assert lhs == sign * ps.resultant(qs)
            checked += 1


def _ascending_sign(m, n):
    big = m + n
    sigma = (big * (big - 1) + m * (m - 1) + n * (n - 1)) // 2
    return -1 if sigma % 2 else 1


class TestSquarefree:
    def test_square_collapses(self):
        p = X_MINUS_Y * X_MINUS_Y
        s = squarefree_part(p)
        assert s in (X_MINUS_Y.canonical()[1],)

    def test_quartic_already_squarefree(self):
        p = separated(P(0, 0, 0, 0, 1), P(0, 0, 0, 0, 1))  # X^4 - Y^4
        assert squarefree_part(p) == p.canonical()[1]

    def test_cube_of_parabola(self):
        base = P2([[0, 1], [], [-1]])  # X - Y^2
        s = squarefree_part(base**3)
        assert s == base.canonical()[1]

    def test_separated_always_squarefree(self):
        rng = random.Random(17)
        for _ in range(25):
            f = random_poly(rng, rng.randint(1, 5))
            g = random_poly(rng, rng.randint(1, 5))
            p = separated(f, g)
            assert squarefree_part(p) == p.canonical()[1]

    def test_gcd_with_derivative_property(self):
        rng = random.Random(18)
        for _ in range(20):
            p = _random_poly2(rng, dy=rng.randint(1, 3))
            s = squarefree_part(p)
            if s.deg_y >= 1:
                g = s.gcd_y(s.derivative_y())
                assert g.deg_y == 0 and g.deg_x == 0

    def test_mixed_content(self):
        # (X^2-1) * (Y - X)^2: content contributes X^2-1, primitive part (Y-X)
        p = Poly2.from_x(P(-1, 0, 1)) * Poly2.y_minus(P(0, 1)) ** 2
        s = squarefree_part(p)
        expected = (Poly2.from_x(P(-1, 0, 1)) * Poly2.y_minus(P(0, 1))).canonical()[1]
        assert s == expected


class TestDiscriminant:
    def test_parabola(self):
        # disc_Y(Y^2 - X) = 4X
        p = P2([[0, -1], [], [1]])
        assert discriminant_y(p) == P(0, 4)


class TestCanonical:
    def test_unit_times_prim(self):
        rng = random.Random(19)
        for _ in range(20):
            p = _random_poly2(rng)
            unit, prim = p.canonical()
            assert prim * unit == p
            assert prim.lc_y.lc > 0

    def test_rendering(self):
        assert poly2_to_str(X2_PLUS_Y2) == "y^2 + x^2"
        assert poly2_to_str(P2([[1, -2], [0, 0, 3]])) == "3*x^2*y - 2*x + 1"
