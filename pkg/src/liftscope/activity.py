"""Arithmetic activity of a polynomial parametrization over Q.

A(t) takes an integer value at some rational t iff it does so at t = a/b with
b dividing an explicit bound M: writing A = P/q with P integral, a prime can
appear in b only while the leading term of P(a/b) fails to dominate, which
pins its exponent below max_i (v_p(lc) - v_p(p_i))/(m - i) and
(v_p(lc) - v_p(q))/m.  For each surviving b the condition A(a/b) in Z is the
single congruence q*b^m | P_b(a) with P_b(T) = b^m P(T/b), which depends only
on a mod q*b^m.  Activity is therefore a finite, exhaustive residue check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, gcd

from .arith import crt_pair, divisors, factorize, valuation
from .intsolve import int_eval
from .poly import Poly


@dataclass(frozen=True)
class CongruenceCheck:
    """One exhausted divisor: no unit residue a mod `modulus` has modulus | P_b(a)."""

    b: int
    modulus: int
    solvable: bool


@dataclass(frozen=True)
class ActivityResult:
    M: int
    active: bool
    witness: Fraction | None  # t0 with A(t0) integral (smallest in probe order)
    coset_scale: Fraction | None  # positive integer lambda: A(t0 + lambda*u) integral
    certificates: tuple[CongruenceCheck, ...]


def denominator_bound(A: Poly) -> tuple[int, int, Poly]:
    """(M, q, P) with A = P/q, P integral, and b | M whenever A(a/b) in Z."""
    if A.is_constant():
        raise ValueError("denominator bound needs nonconstant A")
    q = A.denominator_lcm()
    P = A * q
    coeffs = P.int_coeffs()
    shared = gcd(gcd(*coeffs), q)
    if shared > 1:
        coeffs = [c // shared for c in coeffs]
        q //= shared
        P = Poly(coeffs)
    m = len(coeffs) - 1
    M = 1
    for p in factorize(coeffs[-1]):
        v_lc = valuation(coeffs[-1], p)
        v_q = valuation(q, p) if q % p == 0 else 0
        theta = Fraction(v_lc - v_q, m)
        for i in range(m):
            if coeffs[i]:
                v_i = valuation(coeffs[i], p) if coeffs[i] % p == 0 else 0
                theta = max(theta, Fraction(v_lc - v_i, m - i))
        e = theta.numerator // theta.denominator if theta > 0 else 0
        M *= p**e
    return M, q, P


def _roots_mod_prime_power(coeffs: list[int], p: int, k: int) -> list[int]:
    """All residues r in [0, p^k) with poly(r) = 0 mod p^k, by level lifting."""
    pk = p
    red = [c % pk for c in coeffs]
    roots = [r for r in range(p) if int_eval(red, r) % pk == 0]
    for _ in range(k - 1):
        nxt = pk * p
        red = [c % nxt for c in coeffs]
        roots = [
            r + i * pk
            for r in roots
            for i in range(p)
            if int_eval(red, r + i * pk) % nxt == 0
        ]
        pk = nxt
        if len(roots) > 200000:
            raise ArithmeticError("congruence root explosion")  # pragma: no cover
    return roots


def _first_unit_solution(pb: list[int], modulus: int, b: int) -> int | None:
    """Smallest a in [0, modulus) with modulus | pb(a) and gcd(a, b) = 1.

    Per prime power p^k || modulus the p-content of pb is stripped first: if
    it already covers p^k the prime constrains nothing (it only matters for
    the coprimality filter); otherwise the stripped polynomial has a unit
    coefficient mod p and its root set mod p^(k-c) stays small.  Free levels
    are scanned in ascending order, so the returned residue is the first one
    in the natural enumeration.
    """
    if modulus == 1:
        return 0 if b == 1 else None
    constrained: list[tuple[int, list[int]]] = []
    free_primes: list[int] = []
    for p, k in sorted(factorize(modulus).items()):
        c = min((valuation(x, p) if x else k) for x in pb)
        c = min(c, k)
        if c >= k:
            if b % p == 0:
                free_primes.append(p)
            continue
        q_poly = [x // p**c for x in pb]
        roots = _roots_mod_prime_power(q_poly, p, k - c)
        if not roots:
            return None
        constrained.append((p ** (k - c), roots))
    residues = [0]
    n_c = 1
    for pk, roots in constrained:
        residues = [crt_pair(r, n_c, s, pk) for r in residues for s in roots]
        n_c *= pk
        if len(residues) > 500000:
            raise ArithmeticError("congruence root explosion")  # pragma: no cover
    b_constrained = 1
    for p in factorize(b):
        if n_c % p == 0:
            b_constrained *= p
    residues = sorted(r for r in residues if gcd(r, b_constrained) == 1)
    if not residues:
        return None
    jmax = 1
    for p in free_primes:
        jmax *= p
    for j in range(jmax):
        base = j * n_c
        for r in residues:
            a = base + r
            if all(a % p for p in free_primes):
                return a
    return None


def activity_witness(A: Poly) -> ActivityResult:
    """Decide whether A takes an integer value on Q, with witness or certificate.

    Candidates (b, a) run over divisors b | M ascending, then residues
    a in [0, q*b^m) ascending with gcd(a, b) = 1; the first hit is lifted to
    the least-absolute-value representative.  When nothing hits, the returned
    certificates list one exhausted congruence per divisor.
    """
    M, q, P = denominator_bound(A)
    coeffs = P.int_coeffs()
    m = len(coeffs) - 1
    checks: list[CongruenceCheck] = []
    for b in divisors(M):
        modulus = q * b**m
        pb = [c * b ** (m - i) for i, c in enumerate(coeffs)]
        hit = _first_unit_solution(pb, modulus, b)
        if hit is None:
            checks.append(CongruenceCheck(b, modulus, False))
            continue
        a_star = hit if 2 * hit <= modulus else hit - modulus
        t0 = Fraction(a_star, b)
        val = A(t0)
        if val.denominator != 1:
            raise ArithmeticError("witness failed exact verification")
        lam = integer_coset(A, t0)
        for u in range(-3, 4):
            if A(t0 + lam * u).denominator != 1:
                raise ArithmeticError("coset spot check failed")
        return ActivityResult(M, True, t0, lam, tuple(checks))
    return ActivityResult(M, False, None, None, tuple(checks))


def integer_coset(A: Poly, t0) -> Fraction:
    """Least positive integer lambda with A(t0 + lambda*u) in Z for all u in Z.

    Built from the Taylor coefficients c_i of A at t0: lambda clears each
    denominator at the i-th-root rate, prime by prime.
    """
    t0 = Fraction(t0)
    shifted = A.taylor_shift(t0)
    if shifted[0].denominator != 1:
        raise ValueError("A(t0) is not an integer")
    lam = 1
    exps: dict[int, int] = {}
    for i in range(1, len(shifted.coeffs)):
        den = shifted[i].denominator
        if den == 1:
            continue
        for p, v in factorize(den).items():
            need = ceil(v / i)
            if exps.get(p, 0) < need:
                exps[p] = need
    for p, e in exps.items():
        lam *= p**e
    return Fraction(lam)
