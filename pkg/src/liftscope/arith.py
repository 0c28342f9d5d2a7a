"""Integer and rational helpers: factoring, divisors, exact roots, valuations.

Everything here is exact.  Sizes are small (coefficients of desk-scale
polynomials), so trial division plus Miller-Rabin/Pollard rho is plenty.
"""

from fractions import Fraction
from math import gcd, isqrt

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (valid far beyond 64-bit inputs)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # This base set is deterministic for n < 3.3 * 10^24.
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite odd n (deterministic parameter sweep)."""
    if n % 2 == 0:
        return 2
    for c in range(1, 100):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed on {n}")  # pragma: no cover


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| as {prime: exponent}; 0 and ±1 give {}."""
    n = abs(n)
    out: dict[int, int] = {}
    if n <= 1:
        return out
    for p in range(2, 10000):
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    if n == 1:
        return out
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return out


def divisors(n: int) -> list[int]:
    """Sorted positive divisors of n != 0."""
    if n == 0:
        raise ValueError("divisors of zero")
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def valuation(n: int, p: int) -> int:
    """p-adic valuation of n != 0."""
    if n == 0:
        raise ValueError("valuation of zero")
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v


def iroot(n: int, k: int) -> tuple[int, bool]:
    """Integer k-th root of n >= 0: returns (r, exact) with r = floor(n^(1/k))."""
    if n < 0 or k < 1:
        raise ValueError("iroot needs n >= 0, k >= 1")
    if k == 1 or n in (0, 1):
        return n, True
    if k == 2:
        r = isqrt(n)
        return r, r * r == n
    # Newton iteration from a float seed; exact integer fix-up.
    r = int(round(n ** (1.0 / k))) or 1
    while True:
        q = n // r ** (k - 1)
        nxt = ((k - 1) * r + q) // k
        if nxt >= r:
            break
        r = nxt
    while r**k > n:
        r -= 1
    while (r + 1) ** k <= n:
        r += 1
    return r, r**k == n


def rational_nth_roots(r: Fraction, k: int) -> list[Fraction]:
    """All rational x with x^k = r, sorted.  (0, 1, or 2 of them.)"""
    if k < 1:
        raise ValueError("k >= 1")
    if r == 0:
        return [Fraction(0)]
    num, den = r.numerator, r.denominator
    if k % 2 == 0 and num < 0:
        return []
    a, ea = iroot(abs(num), k)
    b, eb = iroot(den, k)
    if not (ea and eb):
        return []
    root = Fraction(a, b)
    if k % 2 == 1:
        return [root if num > 0 else -root]
    return [-root, root]


def squarefree_kernel(n: int) -> int:
    """Largest squarefree divisor of |n| (1 for n in {0, ±1})."""
    k = 1
    for p in factorize(n):
        k *= p
    return k


def square_class(n: int) -> int:
    """Representative of |n| modulo squares: product of p^(e_p mod 2)."""
    k = 1
    for p, e in factorize(n).items():
        if e % 2:
            k *= p
    return k


def is_rational_square(r: Fraction) -> bool:
    if r < 0:
        return False
    return iroot(r.numerator, 2)[1] and iroot(r.denominator, 2)[1]


def primes_of_fraction(x: Fraction) -> tuple[set[int], set[int]]:
    """(numerator primes, denominator primes) of a nonzero rational."""
    if x == 0:
        raise ValueError("primes of zero")
    return set(factorize(x.numerator)), set(factorize(x.denominator))


def iter_primes():
    """2, 3, 5, 7, ... without end."""
    yield 2
    n = 3
    while True:
        if is_prime(n):
            yield n
        n += 2


def crt_pair(r1: int, m1: int, r2: int, m2: int) -> int:
    """x mod m1*m2 with x = r1 (m1), x = r2 (m2); moduli must be coprime."""
    g, s, _ = ext_gcd(m1, m2)
    if g != 1:
        raise ValueError("moduli not coprime")
    return (r1 + (r2 - r1) * s % m2 * m1) % (m1 * m2)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, t) with g = gcd(a, b) = s*a + t*b."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t
