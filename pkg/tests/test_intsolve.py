import random
from fractions import Fraction

import pytest

from liftscope.arith import (
    divisors,
    factorize,
    iroot,
    is_prime,
    is_rational_square,
    rational_nth_roots,
    squarefree_kernel,
)
from liftscope.intsolve import MonotoneSolver, int_eval, int_roots, rational_roots_int

F = Fraction


class TestArith:
    def test_is_prime_small(self):
        primes = [p for p in range(60) if is_prime(p)]
        assert primes == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]

    def test_is_prime_large(self):
        assert is_prime(2**61 - 1)
        assert not is_prime(2**61 + 1)

    def test_factorize_roundtrip(self):
        rng = random.Random(0)
        for _ in range(50):
            n = rng.randint(2, 10**12)
            f = factorize(n)
            prod = 1
            for p, e in f.items():
                assert is_prime(p)
                prod *= p**e
            assert prod == n

    def test_divisors(self):
        assert divisors(12) == [1, 2, 3, 4, 6, 12]
        assert divisors(1) == [1]

    def test_iroot(self):
        assert iroot(10**18, 2) == (10**9, True)
        assert iroot(10**18 + 1, 2) == (10**9, False)
        assert iroot(3**30, 3) == (3**10, True)
        rng = random.Random(1)
        for _ in range(200):
            n = rng.randint(0, 10**15)
            k = rng.randint(1, 7)
            r, exact = iroot(n, k)
            assert r**k <= n < (r + 1) ** k
            assert exact == (r**k == n)

    def test_rational_nth_roots(self):
        assert rational_nth_roots(F(4, 9), 2) == [F(-2, 3), F(2, 3)]
        assert rational_nth_roots(F(-8, 27), 3) == [F(-2, 3)]
        assert rational_nth_roots(F(2), 2) == []
        assert rational_nth_roots(F(-4), 2) == []
        assert rational_nth_roots(F(0), 5) == [F(0)]

    def test_squarefree_kernel(self):
        assert squarefree_kernel(360) == 30
        assert squarefree_kernel(1) == 1

    def test_is_rational_square(self):
        assert is_rational_square(F(9, 16))
        assert not is_rational_square(F(8, 16))
        assert not is_rational_square(F(-9, 16))


class TestIntRoots:
    def test_simple(self):
        # (x-2)(x+3)(x-10)
        p = [60, -16, -9, 1]
        assert int_eval(p, 2) == 0
        assert int_roots(p) == [-3, 2, 10]

    def test_multiple_roots(self):
        # (x-5)^2 (x+1)
        p = [25, 15, -9, 1]
        assert int_roots(p) == [-1, 5]

    def test_no_roots(self):
        assert int_roots([1, 0, 1]) == []

    def test_huge_roots(self):
        r = 10**9 + 7
        # (x - r)(x + 2r)
        p = [-2 * r * r, r, 1]
        assert int_roots(p) == [-2 * r, r]

    def test_random_planted(self):
        rng = random.Random(2)
        for _ in range(60):
            roots = sorted(set(rng.randint(-50, 50) for _ in range(rng.randint(1, 4))))
            p = [1]
            for r in roots:
                p = _mul_linear(p, r)
            # multiply by an irreducible quadratic to add noise
            p = _mul_poly(p, [rng.randint(1, 5), 0, 1])
            assert int_roots(p) == roots


def _mul_linear(p, r):
    out = [0] * (len(p) + 1)
    for i, c in enumerate(p):
        out[i] += -r * c
        out[i + 1] += c
    return out


def _mul_poly(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


class TestRationalRoots:
    def test_basic(self):
        # (2x - 1)(3x + 2)(x^2 + 1)
        p = _mul_poly(_mul_poly([-1, 2], [2, 3]), [1, 0, 1])
        assert rational_roots_int(p) == [(F(-2, 3), 1), (F(1, 2), 1)]

    def test_multiplicity(self):
        p = _mul_poly(_mul_poly([-1, 2], [-1, 2]), [3, 1])
        got = dict(rational_roots_int(p))
        assert got == {F(1, 2): 2, F(-3): 1}

    def test_exhaustive_against_enumeration(self):
        rng = random.Random(3)
        for _ in range(40):
            coeffs = [rng.randint(-8, 8) for _ in range(rng.randint(2, 6))] + [rng.randint(1, 8)]
            expected = set()
            for b in range(1, 9):
                for a in range(-60, 61):
                    if b != 1 and __import__("math").gcd(a, b) != 1:
                        continue
                    val = sum(c * F(a, b) ** i for i, c in enumerate(coeffs))
                    if val == 0:
                        expected.add(F(a, b))
            got = {r for r, _ in rational_roots_int(coeffs)}
            # enumeration only sees |a|<=60, b<=8; every enumerated root must be found
            assert expected <= got
            for r in got:
                assert sum(c * r**i for i, c in enumerate(coeffs)) == 0


class TestMonotoneSolver:
    def test_square(self):
        s = MonotoneSolver([0, 0, 1])
        assert s.solve(49) == [-7, 7]
        assert s.solve(50) == []
        assert s.solve(0) == [0]
        assert s.solve(-4) == []

    def test_cube(self):
        s = MonotoneSolver([0, 0, 0, 1])
        assert s.solve(-27) == [-3]
        assert s.solve(10**18) == [10**6]

    def test_chebyshev_shape(self):
        s = MonotoneSolver([0, -3, 0, 4])  # 4a^3 - 3a
        assert s.solve(1) == [1]
        # 4*5^3 - 3*5 = 485
        assert s.solve(485) == [5]
        assert s.solve(2) == []
        # turning-zone values: 4a^3-3a on {-1,0,1} gives {-1,0,1}
        assert s.solve(-1) == [-1]
        assert s.solve(0) == [0]

    def test_random_against_scan(self):
        rng = random.Random(4)
        for _ in range(40):
            deg = rng.randint(1, 5)
            coeffs = [rng.randint(-9, 9) for _ in range(deg)] + [rng.choice([-3, -2, -1, 1, 2, 3])]
            s = MonotoneSolver(coeffs)
            for _ in range(20):
                a0 = rng.randint(-40, 40)
                w = int_eval(coeffs, a0)
                got = s.solve(w)
                brute = [a for a in range(-2000, 2001) if int_eval(coeffs, a) == w]
                assert got == brute
                assert a0 in got

    def test_big_values(self):
        # overflow-scale inputs stay exact
        s = MonotoneSolver([0, 0, 0, 0, 1])
        n = 123456789
        assert s.solve(n**4) == [-n, n]
        assert s.solve(n**4 + 1) == []
