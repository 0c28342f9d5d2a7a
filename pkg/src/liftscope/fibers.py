"""Explicit exceptional-set machinery for the separated curve f(X) = g(Y).

Away from the rational zeros of the collision polynomial R(X) (the product of
the pairwise Y-resultants of the component factors), the number of rational
solutions y of g(y) = f(x) splits additively: the graph components contribute
one solution each, and every non-graph factor contributes its own rational
roots.  fiber_formula_check verifies that identity exactly at a point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import factorize
from .bifactor import BiFactorization
from .bipoly import Poly2, discriminant_y, resultant_y
from .errors import InputError
from .poly import Poly
from .unifactor import rational_roots


@dataclass(frozen=True)
class CollisionSet:
    """R(X), its rational zero set, and whether discriminants were folded in."""

    R: Poly
    z_rational: frozenset[Fraction]
    include_discriminants: bool

    def __contains__(self, x) -> bool:
        return Fraction(x) in self.z_rational


def collision_set(fact: BiFactorization, include_discriminants: bool = False) -> CollisionSet:
    """Product of pairwise Y-resultants of the component factors.

    Constant nonzero resultants are omitted; R = 1 if nothing remains.  With
    include_discriminants, each non-graph factor's Y-discriminant is folded
    in as well (good-specialization variant).
    """
    parts = list(fact.all_factors)
    R = Poly.one()
    for a in range(len(parts)):
        for b in range(a + 1, len(parts)):
            res = resultant_y(parts[a], parts[b])
            if res.is_zero():
                raise InputError("repeated factor: input was not squarefree")
            if res.degree >= 1:
                R = R * res
    if include_discriminants:
        for f in fact.nongraph_factors:
            d = discriminant_y(f)
            if d.is_zero():
                raise InputError("non-squarefree factor")
            if d.degree >= 1:
                R = R * d
    zr = frozenset(rational_roots(R)) if R.degree >= 1 else frozenset()
    return CollisionSet(R, zr, include_discriminants)


def fiber_count(f: Poly, g: Poly, x) -> int:
    """Number of distinct rational y with g(y) = f(x)."""
    if g.is_constant():
        raise ValueError("fiber_count needs nonconstant g")
    value = f(Fraction(x))
    return len(rational_roots(g - Poly.constant(value)))


@dataclass(frozen=True)
class FiberReport:
    x: Fraction
    lhs: int
    graph_count: int
    factor_counts: tuple[int, ...]

    @property
    def rhs(self) -> int:
        return self.graph_count + sum(self.factor_counts)

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


def fiber_formula_check(f: Poly, g: Poly, fact: BiFactorization, x) -> FiberReport:
    """Check #fiber(x) = s + sum_j #{rational roots of F_j(x, Y)} exactly.

    Requires x outside the rational collision set; raises InputError there.
    """
    x = Fraction(x)
    coll = collision_set(fact)
    if x in coll:
        raise InputError(f"x = {x} lies in the collision set Z_R")
    lhs = fiber_count(f, g, x)
    per_factor = []
    for F in fact.nongraph_factors:
        spec = F.subst_x(x)
        per_factor.append(len(rational_roots(spec)))
    return FiberReport(x, lhs, len(fact.graph_factors), tuple(per_factor))


def bad_primes(f: Poly, g: Poly) -> set[int]:
    """Primes dividing a coefficient denominator of f or g, or the numerator
    of lc(g).

    Any rational y with g(y) = f(n), n an integer, has its denominator
    supported on these primes.
    """
    if f.is_constant() or g.is_constant():
        raise ValueError("bad_primes needs nonconstant f and g")
    out: set[int] = set()
    for c in f.coeffs + g.coeffs:
        out.update(factorize(c.denominator))
    out.update(factorize(g.lc.numerator))
    return out
