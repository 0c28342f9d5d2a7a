"""End-to-end component analysis of the separated curve f(X) = g(Y) over Q.

The routes, applied in order to each non-graph factor:

1. geometric reducibility (absolute factor count >= 2): Siegel-finite;
2. X-linear factors u*(X - w(Y)): one-infinity with X = w(t), Y = t;
3. quadratic sources detected from the source-even form of g: d_X = 2;
4. user certificates (verified exactly, matched by implicitization);
5. total-degree-2 factors: point count at infinity from the degree form
   (two points -> polylogarithmic Pell-type growth);
6. everything else stays unclassified and the report says so.

Activity of every one-infinity X-parametrization is decided exactly, and the
predicted exponent is theta = max of 1/d_X over the active ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .activity import ActivityResult, activity_witness
from .arith import is_rational_square
from .bifactor import absolute_factor_count, factor_bi
from .bipoly import Poly2, squarefree_part
from .decompose import DecompositionSet, decompositions, strip_graphs
from .errors import CertificateRejected, InputError, InternalInconsistencyError
from .fibers import CollisionSet, collision_set
from .poly import Poly
from .sources import (
    ParamCertificate,
    QuadraticSource,
    detect_quadratic_sources,
    implicitize,
    verify_certificate,
)

SIEGEL_FINITE = "siegel_finite"
ONE_INFINITY = "one_infinity"
TWO_INFINITY = "two_infinity"
UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class ComponentRecord:
    factor: Poly2
    absolute_factors: int
    kind: str
    detail: str
    d_x: int | None = None
    param_A: Poly | None = None
    param_B: Poly | None = None
    source: QuadraticSource | None = None
    activity: ActivityResult | None = None
    provenance: str = "builtin"

    @property
    def is_active(self) -> bool:
        return self.kind == ONE_INFINITY and self.activity is not None and self.activity.active


@dataclass(frozen=True)
class LiftReport:
    f: Poly
    g: Poly
    decomposition_set: DecompositionSet
    components: tuple[ComponentRecord, ...]
    collision: CollisionSet
    theta: Fraction | None
    growth_class: str  # power | polylog | bounded | unknown
    notes: tuple[str, ...] = ()
    certificate_errors: tuple[str, ...] = ()


def _x_linear_inner(F: Poly2) -> Poly | None:
    """For F = u*(X - w(Y)) with u a nonzero constant, return w; else None."""
    if F.deg_x != 1:
        return None
    lead = Poly([c[1] for c in F.coeffs])  # Y-coefficients of X
    if not lead.is_constant() or lead.is_zero():
        return None
    u = lead[0]
    const = Poly([c[0] for c in F.coeffs])  # Y-coefficients of X^0
    return const * (-1 / u)


class _Slot:
    def __init__(self, factor: Poly2, r: int):
        self.factor = factor
        self.r = r
        self.record: ComponentRecord | None = None


def analyze(
    f: Poly, g: Poly, certificates: tuple[ParamCertificate, ...] = ()
) -> LiftReport:
    """Run the full classification and exponent prediction for (f, g)."""
    if f.is_constant() or g.is_constant():
        raise InputError("f and g must be nonconstant")
    curve = squarefree_part(Poly2.separated(f, g))
    H = decompositions(f, g)
    fact = factor_bi(curve)
    stubs = strip_graphs(fact, H)
    coll = collision_set(fact)
    notes: list[str] = []
    cert_errors: list[str] = []

    slots = [_Slot(F, absolute_factor_count(F)) for F in stubs]

    # geometric reducibility
    for slot in slots:
        if slot.r >= 2:
            slot.record = ComponentRecord(
                slot.factor,
                slot.r,
                SIEGEL_FINITE,
                f"geometrically reducible: {slot.r} absolutely irreducible factors",
            )

    # X-linear factors carry the parametrization X = w(t), Y = t on their face
    for slot in slots:
        if slot.record is not None:
            continue
        w = _x_linear_inner(slot.factor)
        if w is None:
            continue
        d_x = w.degree
        if d_x != slot.factor.deg_y:
            raise InternalInconsistencyError("projection degree disagrees with Y-degree")
        slot.record = ComponentRecord(
            slot.factor,
            slot.r,
            ONE_INFINITY,
            "X-linear factor: solved for X",
            d_x=d_x,
            param_A=w,
            param_B=Poly.x(),
        )

    # quadratic sources
    for src in detect_quadratic_sources(f, g):
        comp = src.component()
        slot = _match(slots, comp)
        if slot is None:
            raise InternalInconsistencyError(
                "quadratic source component is not a factor of the curve"
            )
        if slot.record is None:
            if slot.factor.deg_y != 2:
                raise InternalInconsistencyError("projection degree disagrees with Y-degree")
            slot.record = ComponentRecord(
                slot.factor,
                slot.r,
                ONE_INFINITY,
                "quadratic source from the involutive form of g",
                d_x=2,
                param_A=src.A,
                param_B=src.B,
                source=src,
            )
        elif slot.record.kind == ONE_INFINITY and slot.record.d_x != 2:
            raise InternalInconsistencyError("conflicting projection degrees")

    # user certificates: may only move unclassified -> one-infinity
    for cert in certificates:
        try:
            vp = verify_certificate(f, g, cert)
        except CertificateRejected as exc:
            cert_errors.append(
                f"certificate A={cert.A.to_str('t')}, B={cert.B.to_str('t')}: {exc}"
            )
            continue
        comp = implicitize(vp.A, vp.B)
        slot = _match(slots, comp)
        if slot is None:
            cert_errors.append(
                f"certificate A={cert.A.to_str('t')}, B={cert.B.to_str('t')}: "
                "verified, but its component is not a factor of this curve"
            )
            continue
        if slot.record is not None:
            notes.append(
                "certificate duplicates an existing classification; keeping the first"
            )
            continue
        if vp.d_x != slot.factor.deg_y:
            raise InternalInconsistencyError("projection degree disagrees with Y-degree")
        slot.record = ComponentRecord(
            slot.factor,
            slot.r,
            ONE_INFINITY,
            "user-supplied parametrization certificate",
            d_x=vp.d_x,
            param_A=vp.A,
            param_B=vp.B,
            provenance="certificate",
        )

    # conics: the degree form decides the geometric points at infinity
    for slot in slots:
        if slot.record is not None or slot.factor.total_degree != 2:
            continue
        a = slot.factor.coefficient(2, 0)
        b = slot.factor.coefficient(1, 1)
        c = slot.factor.coefficient(0, 2)
        disc = b * b - 4 * a * c
        if disc != 0:
            shape = "split rational" if is_rational_square(disc) else "conjugate"
            slot.record = ComponentRecord(
                slot.factor,
                slot.r,
                TWO_INFINITY,
                f"conic with two {shape} points at infinity "
                f"(degree-form discriminant {disc})",
            )
        else:
            slot.record = ComponentRecord(
                slot.factor,
                slot.r,
                UNCLASSIFIED,
                "conic with one point at infinity but no quadratic source matched",
            )

    for slot in slots:
        if slot.record is None:
            slot.record = ComponentRecord(
                slot.factor,
                slot.r,
                UNCLASSIFIED,
                "no builtin route applies; supply a parametrization certificate",
            )

    # activity of every one-infinity parametrization
    records = []
    for slot in slots:
        rec = slot.record
        if rec.kind == ONE_INFINITY:
            act = activity_witness(rec.param_A)
            rec = ComponentRecord(
                rec.factor,
                rec.absolute_factors,
                rec.kind,
                rec.detail,
                d_x=rec.d_x,
                param_A=rec.param_A,
                param_B=rec.param_B,
                source=rec.source,
                activity=act,
                provenance=rec.provenance,
            )
        records.append(rec)

    theta = None
    actives = [r for r in records if r.is_active]
    if actives:
        theta = max(Fraction(1, r.d_x) for r in actives)
        if theta > Fraction(1, 2):
            raise InternalInconsistencyError("theta exceeded 1/2")

    any_unclassified = any(r.kind == UNCLASSIFIED for r in records)
    any_two_inf = any(r.kind == TWO_INFINITY for r in records)
    if theta is not None:
        growth_class = "power"
        if any_unclassified:
            notes.append(
                "unclassified components remain: the power order reflects only "
                "the classified active components"
            )
    elif any_unclassified:
        growth_class = "unknown"
    elif any_two_inf:
        growth_class = "polylog"
    else:
        growth_class = "bounded"
    if any_unclassified:
        notes.append(
            "upper bound only: after graph removal the count is O(B^{1/2})"
        )

    return LiftReport(
        f,
        g,
        H,
        tuple(records),
        coll,
        theta,
        growth_class,
        tuple(notes),
        tuple(cert_errors),
    )


def _match(slots: list[_Slot], comp: Poly2) -> _Slot | None:
    for slot in slots:
        if slot.factor == comp:
            return slot
    return None


def predicted_growth(report: LiftReport) -> str:
    """Human-readable growth order of the count of inputs with a new lift."""
    if report.growth_class == "power":
        return f"≍ B^{{{report.theta}}}"
    if report.growth_class == "polylog":
        return "polylogarithmic (exponent not computed)"
    if report.growth_class == "bounded":
        return "O(1)"
    return "O(B^{1/2}) upper bound only (unclassified components present)"
