"""Polynomial composition structure: all h with f = g o h, and membership in
Q[A].

The decomposition set is computed exactly: the leading coefficient of h
satisfies lc(g) * l^deg(g) = lc(f) (at most two rational solutions), and each
remaining coefficient of h then occurs linearly with the nonzero multiplier
deg(g) * lc(g) * l^(deg(g)-1), so it is read off top-down and the candidate is
confirmed by exact expansion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import rational_nth_roots
from .bifactor import BiFactorization
from .bipoly import Poly2
from .errors import InternalInconsistencyError
from .poly import Poly


@dataclass(frozen=True)
class DecompositionSet:
    """All h in Q[x] with f = g o h; entries are canonically ordered."""

    entries: tuple[Poly, ...]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __contains__(self, h: Poly):
        return h in self.entries


def decompositions(f: Poly, g: Poly) -> DecompositionSet:
    """The complete set {h : f = g o h} over Q.

    Empty when deg g does not divide deg f or no rational leading coefficient
    works.  Never misses an h: all candidate leading coefficients are tried
    and the rest of h is forced.
    """
    if f.is_constant() or g.is_constant():
        raise ValueError("decompositions needs nonconstant f and g")
    df, dg = f.degree, g.degree
    if df % dg != 0:
        return DecompositionSet(())
    d = df // dg
    found = []
    for ell in rational_nth_roots(f.lc / g.lc, dg):
        h = _solve_inner(f, g, d, ell)
        if h is not None:
            found.append(h)
    found.sort(key=lambda h: h.sort_key())
    return DecompositionSet(tuple(found))


def _solve_inner(f: Poly, g: Poly, d: int, ell) -> Poly | None:
    e = g.degree
    mult = e * g.lc * ell ** (e - 1)
    h = Poly.monomial(ell, d)
    for j in range(d - 1, -1, -1):
        target = (e - 1) * d + j
        cur = g(h)
        cj = (f[target] - cur[target]) / mult
        if cj != 0:
            h = h + Poly.monomial(cj, j)
    return h if g(h) == f else None


def is_poly_in(B: Poly, A: Poly) -> Poly | None:
    """The unique P with B = P(A), or None when B is not a polynomial in A."""
    if A.is_constant():
        raise ValueError("is_poly_in needs nonconstant A")
    coeffs: dict[int, object] = {}
    rem = B
    da = A.degree
    while not rem.is_zero():
        dr = rem.degree
        if dr == 0:
            coeffs[0] = rem[0]
            break
        if dr % da != 0:
            return None
        k = dr // da
        c = rem.lc / A.lc**k
        coeffs[k] = c
        rem = rem - A**k * c
    if not coeffs:
        return Poly.zero()
    out = [0] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    P = Poly(out)
    return P if P(A) == B else None


def strip_graphs(fact: BiFactorization, H: DecompositionSet) -> tuple[Poly2, ...]:
    """Cross-check the degree-1-in-Y factors against the decomposition set and
    return the non-graph factors.

    The graph factors of the separated curve are exactly Y = h(X) for h in H;
    any mismatch is an internal inconsistency, not bad input.
    """
    got = sorted(fact.graph_factors, key=lambda h: h.sort_key())
    want = sorted(H.entries, key=lambda h: h.sort_key())
    if got != want:
        raise InternalInconsistencyError(
            "degree-one components do not match the decomposition set: "
            f"factored {[h.to_str() for h in got]}, decomposed {[h.to_str() for h in want]}"
        )
    return fact.nongraph_factors
