"""Bivariate factorization over Q and the absolute (geometric) factor count.

factor_bi targets the separated shape: squarefree input with constant nonzero
leading Y-coefficient.  The algorithm specializes X at a deterministic probe
point keeping the specialization squarefree, factors the specialization,
Hensel-lifts the monic factors X-adically to one past the X-degree, and
recombines subsets by exact trial division.  The constant leading coefficient
means no leading-coefficient correction is ever needed.

absolute_factor_count uses the partial-differential (Ruppert/Gao) criterion:
the pairs (g, h) with d/dY (g/F) = d/dX (h/F) and the natural degree caps form
a vector space whose dimension is the number of absolutely irreducible
factors.  A mod-p nullity of 1 certifies geometric integrality (the rational
kernel can only be larger, and it is never empty); otherwise the exact
rational kernel is computed and is authoritative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .bipoly import Poly2
from .poly import Poly
from .unifactor import factor_uni


@dataclass(frozen=True)
class BiFactorization:
    """unit * prod(Y - h_i) * prod(F_j) == the factored polynomial, exactly."""

    unit: Fraction
    graph_factors: tuple[Poly, ...]  # h_i, each standing for Y - h_i(X)
    nongraph_factors: tuple[Poly2, ...]  # canonical primitive, deg_Y >= 2

    def expand(self) -> Poly2:
        out = Poly2.one() * self.unit
        for h in self.graph_factors:
            out = out * Poly2.y_minus(h)
        for f in self.nongraph_factors:
            out = out * f
        return out

    @property
    def all_factors(self) -> tuple[Poly2, ...]:
        """Graphs (as Y - h) followed by non-graph factors."""
        return tuple(Poly2.y_minus(h) for h in self.graph_factors) + self.nongraph_factors


def _trunc_x(p: Poly2, n: int) -> Poly2:
    return Poly2([Poly(c.coeffs[:n]) for c in p.coeffs])


def _shift_x(p: Poly2, x0: Fraction) -> Poly2:
    """p(x0 + X, Y)."""
    return Poly2([c.taylor_shift(x0) for c in p.coeffs])


def _poly_gcdex(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """(s, t) with s*a + t*b = 1 for coprime a, b over Q."""
    r0, r1 = a, b
    s0, s1 = Poly.one(), Poly.zero()
    t0, t1 = Poly.zero(), Poly.one()
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.degree != 0:
        raise ValueError("polynomials are not coprime")
    inv = 1 / r0[0]
    return s0 * inv, t0 * inv


def _hensel_pair(F: Poly2, G: Poly2, H: Poly2, S: Poly2, T: Poly2, prec: int):
    """Lift F = G*H (mod X) with S*G + T*H = 1 (mod X) to mod X^prec.

    All of F, G, H are monic in Y; quadratic steps.
    """
    k = 1
    while k < prec:
        k2 = min(2 * k, prec)
        e = _trunc_x(F - G * H, k2)
        q, r = _trunc_x(S * e, k2).divmod_y(H)
        G = _trunc_x(G + T * e + q * G, k2)
        H = _trunc_x(H + r, k2)
        b = _trunc_x(S * G + T * H - Poly2.one(), k2)
        c, d = _trunc_x(S * b, k2).divmod_y(H)
        S = _trunc_x(S - d, k2)
        T = _trunc_x(T - T * b - c * G, k2)
        k = k2
        if G.lc_y != Poly.one() or H.lc_y != Poly.one():
            raise ArithmeticError("lift lost monicity")
    return G, H


def _hensel_multi(F: Poly2, base: list[Poly], prec: int) -> list[Poly2]:
    """Lift monic coprime base factors of F(0, Y) to factors of F mod X^prec."""
    if len(base) == 1:
        return [_trunc_x(F, prec)]
    k = len(base) // 2
    g0 = Poly.one()
    for u in base[:k]:
        g0 = g0 * u
    h0 = Poly.one()
    for u in base[k:]:
        h0 = h0 * u
    s0, t0 = _poly_gcdex(g0, h0)
    as_p2 = lambda p: Poly2([Poly([c]) for c in p.coeffs])  # noqa: E731
    G, H = _hensel_pair(F, as_p2(g0), as_p2(h0), as_p2(s0), as_p2(t0), prec)
    return _hensel_multi(G, base[:k], prec) + _hensel_multi(H, base[k:], prec)


def factor_bi(P: Poly2) -> BiFactorization:
    """Factor a squarefree separated-shape polynomial over Q.

    Preconditions: nonzero, squarefree, positive Y-degree, constant nonzero
    leading Y-coefficient.  Degree-1-in-Y factors come back as graph entries
    h (for Y - h); everything else is canonical with deg_Y >= 2.
    """
    if P.is_zero() or P.deg_y < 1:
        raise ValueError("factor_bi needs positive Y-degree")
    if not P.lc_y.is_constant():
        raise ValueError("leading Y-coefficient must be constant")
    if not P.content_y().is_constant():
        raise ValueError("input has X-only content")
    lc = P.lc_y[0]
    M = P * (1 / lc)  # monic in Y
    if M.gcd_y(M.derivative_y()).deg_y != 0:
        raise ValueError("input is not squarefree")

    monic_factors = _factor_monic(M)

    graphs: list[Poly] = []
    nongraphs: list[Poly2] = []
    unit = lc
    for fac in monic_factors:
        if fac.deg_y == 1:
            graphs.append(-fac[0])
        else:
            u, canon = fac.canonical()
            unit *= u
            nongraphs.append(canon)
    graphs.sort(key=lambda h: h.sort_key())
    nongraphs.sort(key=lambda f: f.sort_key())
    result = BiFactorization(unit, tuple(graphs), tuple(nongraphs))
    if result.expand() != P:
        raise ArithmeticError("bivariate factorization does not multiply back")
    return result


def _probe_points():
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1


def _factor_monic(M: Poly2) -> list[Poly2]:
    """Irreducible monic-in-Y factors of a monic-in-Y squarefree polynomial."""
    n = M.deg_y
    if n == 1:
        return [M]
    d = M.deg_x
    if d is not None and M.deg_x <= 0:
        # no X at all: factor as univariate in Y
        u = Poly([c[0] for c in M.coeffs])
        fact = factor_uni(u)
        return [
            Poly2([Poly([cc]) for cc in q.monic().coeffs])
            for q, k in fact.factors
            for _ in range(k)
        ]
    for x0 in _probe_points():
        u = M.subst_x(x0)
        if u.gcd(u.derivative()).is_constant():
            break
    base_fact = factor_uni(u)
    base = sorted((q.monic() for q, _ in base_fact.factors), key=lambda q: q.sort_key())
    if len(base) == 1:
        return [M]
    prec = (M.deg_x if M.deg_x >= 0 else 0) + 1
    shifted = _shift_x(M, Fraction(x0))
    lifted = _hensel_multi(shifted, base, prec)

    factors: list[Poly2] = []
    rest = shifted
    active = list(range(len(lifted)))
    s = 1
    while 2 * s <= len(active):
        found = False
        for subset in combinations(active, s):
            cand = Poly2.one()
            for i in subset:
                cand = _trunc_x(cand * lifted[i], prec)
            if cand.divides(rest):
                factors.append(_shift_x(cand, Fraction(-x0)))
                rest = rest.exact_div(cand)
                active = [i for i in active if i not in subset]
                found = True
                break
        if not found:
            s += 1
    if rest.deg_y >= 1:
        factors.append(_shift_x(rest, Fraction(-x0)))
    return factors


# -- absolute factor count -----------------------------------------------------------


def absolute_factor_count(F: Poly2) -> int:
    """Number of irreducible factors of F over the algebraic closure of Q.

    F must be irreducible over Q with positive degree in both variables.
    Returns 1 exactly when F is geometrically integral.
    """
    m, n = F.deg_x, F.deg_y
    if not (isinstance(m, int) and m >= 1) or not (isinstance(n, int) and n >= 1):
        raise ValueError("needs positive degree in X and in Y")
    rows, cols = _pde_matrix(F)
    p = 10007
    nullity_p = _nullity_mod_p(rows, cols, p)
    if nullity_p == 1:
        return 1
    return cols - _rank_exact(rows)


def _pde_matrix(F: Poly2):
    """Linear system for pairs (g, h) with d/dY(g/F) = d/dX(h/F).

    Degree caps: g up to (m-1, n), h up to (m, n-1).  Returns (rows, #cols)
    where each row is a dense list of Fractions across the unknowns.
    """
    m, n = F.deg_x, F.deg_y
    Fx = Poly2([c.derivative() for c in F.coeffs])
    Fy = F.derivative_y()

    g_monos = [(i, j) for i in range(m) for j in range(n + 1)]
    h_monos = [(i, j) for i in range(m + 1) for j in range(n)]
    ncols = len(g_monos) + len(h_monos)

    def mono(i, j):
        return Poly2([Poly.zero()] * j + [Poly.monomial(1, i)])

    col_polys = []
    for i, j in g_monos:
        gy = Poly2([Poly.zero()] * (j - 1) + [Poly.monomial(j, i)]) if j else Poly2.zero()
        col_polys.append(gy * F - mono(i, j) * Fy)
    for i, j in h_monos:
        hx = (
            Poly2([Poly.zero()] * j + [Poly.monomial(i, i - 1)]) if i else Poly2.zero()
        )
        col_polys.append(-(hx * F) + mono(i, j) * Fx)

    deg_x_max = max((p.deg_x for p in col_polys if not p.is_zero()), default=0)
    deg_y_max = max((p.deg_y for p in col_polys if not p.is_zero()), default=0)
    rows = []
    for yj in range(deg_y_max + 1):
        for xi in range(deg_x_max + 1):
            row = [cp.coefficient(xi, yj) for cp in col_polys]
            if any(row):
                rows.append(row)
    return rows, ncols


def _nullity_mod_p(rows, ncols, p) -> int | None:
    """Nullity of the reduction mod p, or None when p collides with denominators."""
    mat = []
    for row in rows:
        r = []
        for c in row:
            if c.denominator % p == 0:
                return None
            r.append(c.numerator * pow(c.denominator, p - 2, p) % p)
        mat.append(r)
    rank = 0
    col = 0
    nrows = len(mat)
    while rank < nrows and col < ncols:
        sel = None
        for i in range(rank, nrows):
            if mat[i][col] % p:
                sel = i
                break
        if sel is None:
            col += 1
            continue
        mat[rank], mat[sel] = mat[sel], mat[rank]
        inv = pow(mat[rank][col], p - 2, p)
        mat[rank] = [v * inv % p for v in mat[rank]]
        for i in range(nrows):
            if i != rank and mat[i][col]:
                f = mat[i][col]
                mat[i] = [(a - f * b) % p for a, b in zip(mat[i], mat[rank])]
        rank += 1
        col += 1
    return ncols - rank


def _rank_exact(rows) -> int:
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    col = 0
    while rank < len(mat) and col < ncols:
        sel = None
        for i in range(rank, len(mat)):
            if mat[i][col] != 0:
                sel = i
                break
        if sel is None:
            col += 1
            continue
        mat[rank], mat[sel] = mat[sel], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [v * inv for v in mat[rank]]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
        col += 1
    return rank
