import random
from fractions import Fraction

import pytest

from liftscope.poly import Poly, compose
from liftscope.bipoly import Poly2, squarefree_part
from liftscope.bifactor import factor_bi
from liftscope.decompose import decompositions
from liftscope.errors import InputError
from liftscope.fibers import bad_primes, collision_set, fiber_count, fiber_formula_check

from helpers import P, random_poly

F = Fraction
X = P(0, 1)


def _fact(f, g):
    return factor_bi(squarefree_part(Poly2.separated(f, g)))


class TestCollisionSet:
    def test_quartic(self):
        fact = _fact(P(0, 0, 0, 0, 1), P(0, 0, 0, 0, 1))
        coll = collision_set(fact)
        assert coll.z_rational == frozenset({F(0)})
        # three pairwise resultants, each a constant times a power of X
        assert coll.R.degree == 5

    def test_single_factor_gives_one(self):
        fact = _fact(X, P(0, 0, 1))
        coll = collision_set(fact)
        assert coll.R == Poly.one()
        assert coll.z_rational == frozenset()

    def test_two_graphs(self):
        fact = _fact(P(1, 0, 1) ** 2, P(0, 0, 1))
        coll = collision_set(fact)
        # Res_Y(Y - (X^2+1), Y + (X^2+1)) = -2(X^2+1), no rational zeros
        assert coll.R in (P(-2, 0, -2), P(2, 0, 2))
        assert coll.z_rational == frozenset()

    def test_discriminant_flag(self):
        fact = _fact(X, P(0, 0, 1))  # single factor Y^2 - X, disc_Y = 4X
        coll = collision_set(fact, include_discriminants=True)
        assert coll.z_rational == frozenset({F(0)})


class TestFiberCount:
    def test_square_examples(self):
        assert fiber_count(X, P(0, 0, 1), 4) == 2
        assert fiber_count(X, P(0, 0, 1), 0) == 1
        assert fiber_count(X, P(0, 0, 1), 2) == 0

    def test_quartic(self):
        assert fiber_count(P(0, 0, 0, 0, 1), P(0, 0, 0, 0, 1), 1) == 2


class TestFiberFormula:
    def test_quartic_at_one(self):
        f = g = P(0, 0, 0, 0, 1)
        rep = fiber_formula_check(f, g, _fact(f, g), 1)
        assert rep.lhs == 2 and rep.graph_count == 2 and rep.factor_counts == (0,)
        assert rep.ok

    def test_parabola(self):
        f, g = X, P(0, 0, 1)
        fact = _fact(f, g)
        rep = fiber_formula_check(f, g, fact, 9)
        assert rep.lhs == 2 and rep.rhs == 2
        rep = fiber_formula_check(f, g, fact, 2)
        assert rep.lhs == 0 and rep.rhs == 0

    def test_collision_point_rejected(self):
        f = g = P(0, 0, 0, 0, 1)
        with pytest.raises(InputError):
            fiber_formula_check(f, g, _fact(f, g), 0)

    def test_random_pairs(self):
        rng = random.Random(51)
        pairs = 0
        while pairs < 30:
            f = random_poly(rng, rng.randint(1, 5), denominators=(1, 2))
            g = random_poly(rng, rng.randint(1, 5))
            if rng.random() < 0.4:  # force graph components sometimes
                h = random_poly(rng, 1)
                f = compose(g, h)
            fact = _fact(f, g)
            coll = collision_set(fact)
            for _ in range(5):
                x = F(rng.randint(-20, 20), rng.randint(1, 6))
                if x in coll:
                    continue
                assert fiber_formula_check(f, g, fact, x).ok
            pairs += 1

    def test_generic_count_is_s(self):
        # far outside every thin set, the count equals the number of graphs
        f = g = P(0, 0, 0, 0, 1)
        fact = _fact(f, g)
        H = decompositions(f, g)
        hits = 0
        for x in range(10**6, 10**6 + 30):
            rep = fiber_formula_check(f, g, fact, x)
            if all(c == 0 for c in rep.factor_counts):
                assert rep.lhs == len(H)
                hits += 1
        assert hits == 30


class TestBadPrimes:
    def test_denominator(self):
        assert bad_primes(X, P(F(1, 2), 0, 1)) == {2}

    def test_leading_numerator(self):
        assert bad_primes(P(0, 0, 1), P(1, 0, 5)) == {5}

    def test_clean_pair(self):
        assert bad_primes(P(0, 0, 0, 1), P(0, 0, 1)) == set()

    def test_lift_denominators_supported(self):
        rng = random.Random(52)
        for _ in range(10):
            f = random_poly(rng, rng.randint(1, 3), denominators=(1, 2, 3))
            g = random_poly(rng, rng.randint(1, 3), denominators=(1, 2))
            primes = bad_primes(f, g)
            for n in range(-40, 41):
                val = g - Poly.constant(f(n))
                if val.is_constant():
                    continue
                from liftscope.unifactor import rational_roots

                for y in rational_roots(val):
                    den = y.denominator
                    for p in primes:
                        while den % p == 0:
                            den //= p
                    assert den == 1
