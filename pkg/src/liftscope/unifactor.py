"""Univariate factorization over Q and exact rational root extraction.

The pipeline is the classical one for desk-scale degrees: Yun squarefree
decomposition, reduction modulo the first usable prime (deterministic probe
order), deterministic Berlekamp over GF(p), quadratic Hensel lifting to a
Mignotte-style coefficient bound, and exhaustive subset recombination.  No
lattice reduction; degrees here stay in the tens.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, isqrt

from .arith import iter_primes
from .intsolve import rational_roots_int
from .poly import Poly

# -- GF(p) polynomial arithmetic (ascending int lists) ---------------------------


def _gf_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _gf_from_int(f: list[int], p: int) -> list[int]:
    return _gf_trim([c % p for c in f])


def _gf_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _gf_trim(out)


def _gf_sub(a: list[int], b: list[int], p: int) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        out[i] = (out[i] - y) % p
    return _gf_trim(out)


def _gf_monic(a: list[int], p: int) -> list[int]:
    if not a:
        return []
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def _gf_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    quot = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] % p
        if c == 0:
            a[i] = 0
            continue
        q = c * inv % p
        quot[i - db] = q
        for j, bc in enumerate(b):
            a[i - db + j] = (a[i - db + j] - q * bc) % p
    return _gf_trim(quot), _gf_trim(a)


def _gf_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    while b:
        a, b = b, _gf_divmod(a, b, p)[1]
    return _gf_monic(a, p)


def _gf_gcdex(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int], list[int]]:
    """(s, t, g) with s*a + t*b = g = monic gcd."""
    r0, r1 = list(a), list(b)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _gf_sub(s0, _gf_mul(q, s1, p), p)
        t0, t1 = t1, _gf_sub(t0, _gf_mul(q, t1, p), p)
    if not r0:
        raise ValueError("gcdex of zero polynomials")
    inv = pow(r0[-1], p - 2, p)
    scale = lambda f: [c * inv % p for c in f]  # noqa: E731
    return scale(s0), scale(t0), scale(r0)


def _gf_pow_mod(a: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _gf_divmod(a, mod, p)[1]
    while e:
        if e & 1:
            result = _gf_divmod(_gf_mul(result, base, p), mod, p)[1]
        base = _gf_divmod(_gf_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _gf_berlekamp(f: list[int], p: int) -> list[list[int]]:
    """All monic irreducible factors of monic squarefree f over GF(p).

    Deterministic: the Berlekamp subalgebra basis is scanned in a fixed
    order, shifting by every field element.
    """
    n = len(f) - 1
    if n <= 1:
        return [f]
    # Q[i] = x^(i*p) mod f
    xp = _gf_pow_mod([0, 1], p, f, p)
    rows = [[1] + [0] * (n - 1)]
    cur = [1]
    for _ in range(1, n):
        cur = _gf_divmod(_gf_mul(cur, xp, p), f, p)[1]
        rows.append(list(cur) + [0] * (n - len(cur)))
    # nullspace of (Q - I) acting on row vectors
    mat = [[(rows[i][j] - (1 if i == j else 0)) % p for j in range(n)] for i in range(n)]
    basis = _gf_left_nullspace(mat, p)
    r = len(basis)
    if r == 1:
        return [f]
    factors = [f]
    for v in basis:
        h = _gf_trim(list(v))
        if len(h) <= 1:
            continue  # the constant vector splits nothing
        for s in range(p):
            if len(factors) == r:
                return sorted(factors, key=lambda q: (len(q), q))
            hs = _gf_sub(h, [s], p)
            nxt = []
            for u in factors:
                if len(u) - 1 <= 1:
                    nxt.append(u)
                    continue
                g = _gf_gcd(u, hs, p)
                if 0 < len(g) - 1 < len(u) - 1:
                    nxt.append(g)
                    nxt.append(_gf_divmod(u, g, p)[0])
                else:
                    nxt.append(u)
            factors = nxt
    return sorted(factors, key=lambda q: (len(q), q))


def _gf_left_nullspace(mat: list[list[int]], p: int) -> list[list[int]]:
    """Basis of {v : v * mat = 0} over GF(p)."""
    n = len(mat)
    # reduce mat^T and read the kernel of v -> v*mat, i.e. solve mat^T v^T = 0
    m = [[mat[i][j] % p for i in range(n)] for j in range(n)]  # transpose
    pivots = []
    row = 0
    for col in range(n):
        sel = None
        for i in range(row, n):
            if m[i][col]:
                sel = i
                break
        if sel is None:
            continue
        m[row], m[sel] = m[sel], m[row]
        inv = pow(m[row][col], p - 2, p)
        m[row] = [c * inv % p for c in m[row]]
        for i in range(n):
            if i != row and m[i][col]:
                f = m[i][col]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for r_i, pc in enumerate(pivots):
            v[pc] = (-m[r_i][fc]) % p
        basis.append(v)
    return basis


# -- Hensel lifting ----------------------------------------------------------------


def _zz_trunc(f: list[int], m: int) -> list[int]:
    """Symmetric reduction of every coefficient into (-m/2, m/2]."""
    out = []
    half = m // 2
    for c in f:
        c %= m
        if c > half:
            c -= m
        out.append(c)
    return _gf_trim(out)


def _zz_mul(a: list[int], b: list[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _gf_trim(out)


def _zz_sub(a: list[int], b: list[int]) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        out[i] -= y
    return _gf_trim(out)


def _zz_add(a: list[int], b: list[int]) -> list[int]:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, y in enumerate(b):
        out[i] += y
    return _gf_trim(out)


def _zz_div_monic(a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    """Division by a monic integer polynomial (exact integer arithmetic)."""
    a = list(a)
    db = len(b) - 1
    quot = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c == 0:
            continue
        quot[i - db] = c
        for j, bc in enumerate(b):
            a[i - db + j] -= c * bc
    return _gf_trim(quot), _gf_trim(a)


def _hensel_step(m, f, g, h, s, t):
    """One quadratic lift: mod m data to mod m**2 data (h monic)."""
    M = m * m
    e = _zz_trunc(_zz_sub(f, _zz_mul(g, h)), M)
    q, r = _zz_div_monic(_zz_mul(s, e), h)
    q, r = _zz_trunc(q, M), _zz_trunc(r, M)
    u = _zz_add(_zz_mul(t, e), _zz_mul(q, g))
    G = _zz_trunc(_zz_add(g, u), M)
    H = _zz_trunc(_zz_add(h, r), M)
    b = _zz_trunc(_zz_sub(_zz_add(_zz_mul(s, G), _zz_mul(t, H)), [1]), M)
    c, d = _zz_div_monic(_zz_mul(s, b), H)
    c, d = _zz_trunc(c, M), _zz_trunc(d, M)
    S = _zz_trunc(_zz_sub(s, d), M)
    T = _zz_trunc(_zz_sub(_zz_sub(t, _zz_mul(t, b)), _zz_mul(c, G)), M)
    return G, H, S, T


def _hensel_lift(p: int, f: list[int], factors: list[list[int]], l: int) -> list[list[int]]:
    """Lift f = lc(f) * prod(factors) (mod p) to the same shape mod p**l.

    `factors` are monic mod p; the result is monic mod p**l, in matching order.
    """
    r = len(factors)
    lc = f[-1]
    P = p**l
    if r == 1:
        inv = pow(lc % P, -1, P)
        return [_zz_trunc([c * inv for c in f], P)]
    k = r // 2
    d = max(1, (l - 1).bit_length())
    g = [lc % p]
    for fi in factors[:k]:
        g = _gf_mul(g, fi, p)
    h = [1]
    for fi in factors[k:]:
        h = _gf_mul(h, fi, p)
    s, t, one = _gf_gcdex(g, h, p)
    if one != [1]:
        raise ArithmeticError("lift factors not coprime mod p")
    g = _zz_trunc(g, p)
    h = _zz_trunc(h, p)
    s = _zz_trunc(s, p)
    t = _zz_trunc(t, p)
    m = p
    for _ in range(d):
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m
    return _hensel_lift(p, _zz_trunc(g, P), factors[:k], l) + _hensel_lift(
        p, _zz_trunc(h, P), factors[k:], l
    )


# -- Zassenhaus --------------------------------------------------------------------


def _mignotte_bound(f: list[int]) -> int:
    n = len(f) - 1
    a = max(abs(c) for c in f)
    return (isqrt(n + 1) + 1) * 2**n * a * abs(f[-1])


def _choose_prime(f: list[int]):
    """First prime keeping f squarefree of full degree (deterministic order)."""
    df = _gf_trim([i * c for i, c in enumerate(f)][1:])
    for p in iter_primes():
        if f[-1] % p == 0:
            continue
        fp = _gf_from_int(f, p)
        dfp = _gf_from_int(df, p)
        if not dfp:
            continue
        if len(_gf_gcd(fp, dfp, p)) == 1:
            return p
    raise ArithmeticError("no usable prime found")  # pragma: no cover


def _zassenhaus(f: list[int]) -> list[list[int]]:
    """Irreducible factors over Z of a primitive squarefree f with lc > 0."""
    n = len(f) - 1
    if n == 1:
        return [f]
    p = _choose_prime(f)
    modular = _gf_berlekamp(_gf_monic(_gf_from_int(f, p), p), p)
    if len(modular) == 1:
        return [f]
    bound = _mignotte_bound(f)
    l = 1
    pl = p
    while pl <= 2 * bound:
        pl *= p
        l += 1
    lifted = _hensel_lift(p, f, modular, l)
    P = p**l
    result = []
    rest = list(f)
    active = list(range(len(lifted)))
    s = 1
    while 2 * s <= len(active):
        found = False
        for subset in combinations(active, s):
            cand = [rest[-1]]
            for i in subset:
                cand = _zz_trunc(_zz_mul(cand, lifted[i]), P)
            cand = _int_primitive_pos(cand)
            quot = _int_exact_div(rest, cand)
            if quot is not None:
                result.append(cand)
                rest = quot
                active = [i for i in active if i not in subset]
                found = True
                break
        if not found:
            s += 1
    result.append(_int_primitive_pos(rest))
    result = [q for q in result if len(q) > 1]
    return sorted(result, key=lambda q: (len(q), q[::-1]))


def _int_primitive_pos(f: list[int]) -> list[int]:
    c = gcd(*f) if len(f) > 1 else abs(f[0]) if f else 0
    if c == 0:
        return list(f)
    if f[-1] < 0:
        c = -c
    return [x // c for x in f]


def _int_exact_div(a: list[int], b: list[int]) -> list[int] | None:
    """a / b over Z if exact, else None."""
    if not b:
        return None
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    if len(a) - 1 < db:
        return None
    quot = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c == 0:
            continue
        if c % lb:
            return None
        q = c // lb
        quot[i - db] = q
        for j, bc in enumerate(b):
            a[i - db + j] -= q * bc
    if any(a):
        return None
    return quot


# -- public API ---------------------------------------------------------------------


@dataclass(frozen=True)
class UniFactorization:
    """unit * prod(factor^multiplicity) == the factored polynomial, exactly."""

    unit: Fraction
    factors: tuple[tuple[Poly, int], ...]

    def expand(self) -> Poly:
        out = Poly.constant(self.unit)
        for q, k in self.factors:
            out = out * q**k
        return out


def factor_uni(p: Poly) -> UniFactorization:
    """Complete irreducible factorization over Q, deterministically ordered.

    Factors are primitive over Z with positive leading coefficient.
    """
    if p.is_zero():
        raise ValueError("factor of zero polynomial")
    unit, parts = p.squarefree_decomposition()
    factors: list[tuple[Poly, int]] = []
    for q, k in parts:
        for coeffs in _zassenhaus(q.int_coeffs()):
            factors.append((Poly(coeffs), k))
    factors.sort(key=lambda fk: fk[0].sort_key())
    result = UniFactorization(unit, tuple(factors))
    if result.expand() != p:
        raise ArithmeticError("factorization does not multiply back")
    return result


def is_irreducible(p: Poly) -> bool:
    if p.is_zero() or p.is_constant():
        return False
    fact = factor_uni(p)
    return len(fact.factors) == 1 and fact.factors[0][1] == 1


def rational_roots(p: Poly) -> dict[Fraction, int]:
    """All rational roots of p with multiplicities (independent of factor_uni)."""
    if p.is_zero():
        raise ValueError("rational roots of zero polynomial")
    if p.is_constant():
        return {}
    prim = p.primitive()
    return {r: m for r, m in rational_roots_int(prim.int_coeffs())}
