"""Square-root (projection-degree-2) sources and parametrization certificates.

A non-graph rational component with one point at infinity and quadratic
projection to the X-line exists iff g has an affine involution Y -> 2c - Y,
i.e. g(Y) = G((Y-c)^2), and f(alpha*U + beta) = G(U*E(U)^2); the component is
then X = alpha*t^2 + beta, Y = c + t*E(t^2).  Detection reduces to: find the
unique candidate center, list the inner polynomials V with f = G o V, and for
each odd-multiplicity rational root beta of V test whether V(beta + Z)/Z is a
constant times a perfect square.  Every acceptance is confirmed by exact
identity checks, so the search cannot over-report.

Certificates for higher projection degree are verified, never searched for:
the composition identity, birationality (difference-quotient resultant), and
the non-graph condition are each checked exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import iroot, square_class
from .bipoly import Poly2, squarefree_part
from .decompose import decompositions, is_poly_in
from .errors import CertificateRejected, InternalInconsistencyError
from .poly import Poly
from .unifactor import rational_roots


@dataclass(frozen=True)
class SourceEvenForm:
    """g(Y) = quotient((Y - center)^2); the center is unique."""

    center: Fraction
    quotient: Poly

    def outer(self) -> Poly:
        c = self.center
        return self.quotient(Poly([c * c, -2 * c, 1]))


def _even_substitution(E: Poly) -> Poly:
    """E(t^2): spread the coefficients across even powers."""
    coeffs = []
    for v in E.coeffs:
        coeffs.extend((v, 0))
    return Poly(coeffs[:-1]) if coeffs else Poly.zero()


@dataclass(frozen=True)
class QuadraticSource:
    """The component X = alpha*t^2 + beta, Y = center + t*E(t^2)."""

    alpha: Fraction
    beta: Fraction
    center: Fraction
    E: Poly

    @property
    def A(self) -> Poly:
        return Poly([self.beta, 0, self.alpha])

    @property
    def B(self) -> Poly:
        return Poly([self.center]) + Poly.x() * _even_substitution(self.E)

    def component(self) -> Poly2:
        return implicitize(self.A, self.B)


@dataclass(frozen=True)
class ParamCertificate:
    """Claimed polynomial parametrization X = A(t), Y = B(t) of a component."""

    A: Poly
    B: Poly


@dataclass(frozen=True)
class VerifiedParam:
    """A certificate that passed all three checks; d_x = deg A."""

    A: Poly
    B: Poly
    d_x: int


def source_even_center(g: Poly) -> SourceEvenForm | None:
    """The unique source-even form of g, or None.

    Odd degree can never work; for even degree the only possible center is
    -a_(n-1)/(n a_n), and the test is the vanishing of the odd coefficients
    after shifting there.
    """
    if g.is_constant():
        raise ValueError("source_even_center needs nonconstant g")
    n = g.degree
    if n % 2 == 1:
        return None
    c = -g[n - 1] / (n * g[n])
    shifted = g.taylor_shift(c)
    if any(shifted[i] != 0 for i in range(1, n + 1, 2)):
        return None
    G = Poly([shifted[i] for i in range(0, n + 1, 2)])
    return SourceEvenForm(c, G)


def construct_quadratic_source(
    G: Poly, c, alpha, beta, E: Poly
) -> tuple[Poly, QuadraticSource]:
    """Build f with f(alpha*t^2 + beta) = g(c + t*E(t^2)) for g = G((Y-c)^2).

    Returns (f, source); the identity is verified by exact expansion.
    """
    alpha, beta, c = Fraction(alpha), Fraction(beta), Fraction(c)
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    if E.is_zero():
        raise ValueError("E must be nonzero")
    if G.is_constant():
        raise ValueError("G must be nonconstant")
    inner = Poly.x() * E * E  # U * E(U)^2
    W = G(inner)
    f = W(Poly([-beta / alpha, 1 / alpha]))
    src = QuadraticSource(alpha, beta, c, E)
    g = SourceEvenForm(c, G).outer()
    if f(src.A) != g(src.B):
        raise InternalInconsistencyError("constructed source fails its identity")
    return f, src


def detect_quadratic_sources(f: Poly, g: Poly) -> tuple[QuadraticSource, ...]:
    """All quadratic sources of the pair (f, g), one per component.

    Empty when g is not source-even.  Sources are normalized so alpha is a
    squarefree integer and E has positive leading coefficient; distinct
    (alpha, beta, E) describing the same component are deduplicated by the
    implicitized component polynomial.
    """
    if f.is_constant() or g.is_constant():
        raise ValueError("detect_quadratic_sources needs nonconstant f and g")
    sef = source_even_center(g)
    if sef is None:
        return ()
    c, G = sef.center, sef.quotient
    out: list[tuple[tuple, QuadraticSource]] = []
    seen: set = set()
    for V in decompositions(f, G):
        for beta, mult in sorted(rational_roots(V).items()):
            if mult % 2 == 0:
                continue
            shifted = V.taylor_shift(beta)
            S = Poly(shifted.coeffs[1:])  # V(beta + Z) = Z * S(Z)
            unit, parts = S.squarefree_decomposition()
            if any(k % 2 for _, k in parts):
                continue
            T = Poly.one()
            for q, k in parts:
                T = T * q ** (k // 2)
            alpha = unit
            E = T(Poly([0, alpha])) * alpha  # E(U) = alpha * T(alpha U)
            alpha, E = _normalize_source_scale(alpha, E)
            src = QuadraticSource(alpha, beta, c, E)
            if f(src.A) != g(src.B):
                raise InternalInconsistencyError("detected source fails its identity")
            if is_poly_in(src.B, src.A) is not None:
                raise InternalInconsistencyError("detected source is a graph")
            comp = src.component()
            if comp in seen:
                continue
            seen.add(comp)
            out.append(((comp.sort_key(), alpha, beta, E.sort_key()), src))
    out.sort(key=lambda pair: pair[0])
    return tuple(src for _, src in out)


def _normalize_source_scale(alpha: Fraction, E: Poly) -> tuple[Fraction, Poly]:
    """Canonical representative under t -> lambda*t.

    The reparametrization maps (alpha, E(U)) to (alpha*l^2, l*E(l^2 U)), so
    alpha is determined up to rational squares: reduce it to the squarefree
    integer representing its square class, then fix the sign of E's leading
    coefficient.
    """
    target = square_class(alpha.numerator) * square_class(alpha.denominator)
    if alpha < 0:
        target = -target
    ratio = alpha / target  # a positive rational square, equal to 1/lambda^2
    num_r, ok_n = iroot(ratio.numerator, 2)
    den_r, ok_d = iroot(ratio.denominator, 2)
    if not (ok_n and ok_d):
        raise InternalInconsistencyError("square-class reduction failed")
    lam = Fraction(den_r, num_r)
    new_E = E(Poly([0, lam * lam])) * lam
    if new_E.lc < 0:
        new_E = -new_E
    return Fraction(target), new_E


def _difference_quotient(A: Poly) -> Poly2:
    """(A(t) - A(s)) / (t - s) as a polynomial in t with Q[s] coefficients."""
    n = A.degree
    rows = []
    for j in range(n):
        rows.append(Poly([A[i] for i in range(j + 1, n + 1)]))
    return Poly2(rows)


def is_birational(A: Poly, B: Poly) -> bool:
    """Whether t -> (A(t), B(t)) is injective on all but finitely many points.

    After dividing the common (t - s) out of A(t)-A(s) and B(t)-B(s), the
    parametrization is birational iff the two quotients are coprime over
    Q(s), i.e. their t-resultant is a nonzero polynomial in s.
    """
    if A.is_constant() or B.is_constant():
        return False
    qa, qb = _difference_quotient(A), _difference_quotient(B)
    if qa.deg_y == 0 or qb.deg_y == 0:
        # one map is affine: alone it separates points
        return True
    return not qa.resultant_std(qb).is_zero()


def verify_certificate(f: Poly, g: Poly, cert: ParamCertificate) -> VerifiedParam:
    """Accept a claimed parametrization iff all three clauses hold exactly:
    the composition identity f(A) = g(B), birationality, and B not being a
    polynomial in A (non-graph).  Rejections carry one reason per clause.
    """
    A, B = cert.A, cert.B
    if A.is_constant():
        raise CertificateRejected(["A must be nonconstant"])
    reasons = []
    if f(A) != g(B):
        reasons.append("identity f(A(t)) = g(B(t)) fails")
    if not is_birational(A, B):
        reasons.append("parametrization is not birational onto its image")
    if not B.is_constant() and is_poly_in(B, A) is not None:
        reasons.append("graph component: B is a polynomial in A")
    if reasons:
        raise CertificateRejected(reasons)
    return VerifiedParam(A, B, A.degree)


def implicitize(A: Poly, B: Poly) -> Poly2:
    """The canonical defining polynomial of the curve swept by (A(t), B(t)).

    Computed as Res_t(A(t) - X, B(t) - Y) by interpolation in X (deg B + 1
    sample points, each a univariate resultant over Q[Y]), then reduced to
    its squarefree primitive part.
    """
    if A.is_constant() or B.is_constant():
        raise ValueError("implicitize needs nonconstant A and B")
    db = B.degree
    xs: list[Fraction] = []
    k = 0
    while len(xs) < db + 1:
        xs.append(Fraction(k))
        k = -k if k > 0 else -k + 1
    samples = []
    for x0 in xs:
        p1 = Poly2(
            [Poly.constant(A[j] - (x0 if j == 0 else 0)) for j in range(A.degree + 1)]
        )
        p2 = Poly2([Poly([B[0], -1])] + [Poly.constant(B[j]) for j in range(1, db + 1)])
        samples.append(p1.resultant_std(p2))  # a Poly in Y
    max_y = max(s.degree for s in samples)
    rows = [[Fraction(0)] * (db + 1) for _ in range(max_y + 1)]
    for i, x0 in enumerate(xs):
        li = Poly.one()
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            li = li * Poly([-xj, 1])
            denom *= x0 - xj
        li = li * (1 / denom)
        for ypow in range(len(samples[i].coeffs)):
            cy = samples[i][ypow]
            if cy == 0:
                continue
            for xpow in range(len(li.coeffs)):
                rows[ypow][xpow] += cy * li[xpow]
    result = Poly2([Poly(r) for r in rows])
    if result.is_zero():
        raise InternalInconsistencyError("implicitization produced zero")
    return squarefree_part(result)
