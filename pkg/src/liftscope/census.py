"""Brute-force verification: count integer inputs n with a new rational lift.

new_lift_count(B) is the number of n with |n| <= B such that g(y) = f(n) has
a rational solution y different from every graph value h(n).  The search
enumerates n, solves g(y) = f(n) exactly (candidate denominators b are pinned
down by the same valuation argument that bounds lift denominators to the bad
primes), and excludes graph values.

Two interchangeable engines produce identical results:

* a scalar engine in exact integer arithmetic (always available);
* a chunked numpy int64 engine used only when precomputed worst-case bounds
  prove that no intermediate can overflow; float seeds locate roots, every
  acceptance is certified by exact int64 comparisons, and any element the
  vector pass cannot certify is re-solved by the scalar engine.

Enumeration is chunked deterministically; chunk results merge by addition, so
the counts do not depend on the degree of parallelism.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from .arith import factorize, valuation
from .decompose import DecompositionSet, decompositions
from .errors import InputError
from .intsolve import MonotoneSolver, grid_marks, int_eval
from .poly import Poly

_CHUNK = 1 << 16
_INT64_SAFE = 1 << 62


@dataclass(frozen=True)
class CensusSeries:
    checkpoints: tuple[int, ...]
    counts: tuple[int, ...]
    fitted_slope: float | None
    residual: float | None
    prediction: str | None = None


@dataclass(frozen=True)
class SlopeFit:
    slope: float
    residual: float
    used_checkpoints: int
    verdict: str | None


# -- the solving plan -----------------------------------------------------------------


class _Plan:
    """Integer-only data for solving g(y) = f(n) over Q, n an integer."""

    def __init__(self, f: Poly, g: Poly, H: DecompositionSet):
        self.q_f = f.denominator_lcm()
        self.f_num = (f * self.q_f).int_coeffs()
        self.q_g = g.denominator_lcm()
        self.g_num = (g * self.q_g).int_coeffs()
        self.m = len(self.g_num) - 1
        self.bs = self._denominators()
        self.gb: dict[int, list[int]] = {}
        self.qg_bm: dict[int, int] = {}
        self.solvers: dict[int, MonotoneSolver] = {}
        for b in self.bs:
            coeffs = [c * b ** (self.m - i) for i, c in enumerate(self.g_num)]
            self.gb[b] = coeffs
            self.qg_bm[b] = self.q_g * b**self.m
            self.solvers[b] = MonotoneSolver(coeffs)
        self.graphs = []
        for h in H.entries:
            q_h = h.denominator_lcm()
            self.graphs.append(((h * q_h).int_coeffs(), q_h))

    def _denominators(self) -> list[int]:
        """All b that can be the denominator of a lift of an integer value.

        v_p(b) = e forces the leading term of the cleared g to dominate once
        e clears every coefficient ratio, and then integrality of g(y) = f(n)
        caps e by (v_p(lc) - v_p(q_g) + v_p(q_f)) / m.
        """
        lc = self.g_num[-1]
        m = self.m
        primes = set(factorize(lc)) | set(factorize(self.q_f))
        D = 1
        for p in sorted(primes):
            v_lc = valuation(lc, p)
            v_qg = valuation(self.q_g, p) if self.q_g % p == 0 else 0
            v_qf = valuation(self.q_f, p) if self.q_f % p == 0 else 0
            theta = Fraction(v_lc - v_qg + v_qf, m)
            for i in range(m):
                ci = self.g_num[i]
                if ci:
                    v_i = valuation(ci, p) if ci % p == 0 else 0
                    theta = max(theta, Fraction(v_lc - v_i, m - i))
            if theta > 0:
                D *= p ** (theta.numerator // theta.denominator)
        from .arith import divisors

        return divisors(D)

    # -- scalar engine ------------------------------------------------------------

    def lifts(self, n: int) -> list[Fraction]:
        """All rational y with g(y) = f(n), exactly."""
        v = int_eval(self.f_num, n)
        out = []
        for b in self.bs:
            t = self.qg_bm[b] * v
            if t % self.q_f:
                continue
            w = t // self.q_f
            for a in self.solvers[b].solve(w):
                if gcd(a, b) == 1:
                    out.append(Fraction(a, b))
        return sorted(out)

    def graph_values(self, n: int) -> set[Fraction]:
        return {Fraction(int_eval(hn, n), qh) for hn, qh in self.graphs}

    def has_new_lift(self, n: int) -> bool:
        v = int_eval(self.f_num, n)
        graph_vals = None
        for b in self.bs:
            t = self.qg_bm[b] * v
            if t % self.q_f:
                continue
            w = t // self.q_f
            for a in self.solvers[b].solve(w):
                if gcd(a, b) != 1:
                    continue
                if graph_vals is None:
                    graph_vals = self.graph_values(n)
                if Fraction(a, b) not in graph_vals:
                    return True
        return False


# -- vectorized engine ------------------------------------------------------------------


def _np_horner(coeffs, x):
    acc = np.zeros_like(x)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


class _TailBranch:
    """Solve P(a) = w for integer a in [lo_bound, amax], P strictly increasing
    and convex there (lo_bound is beyond every root of P' and P'')."""

    def __init__(self, coeffs: list[int], lo_bound: int, amax: int):
        self.coeffs = coeffs
        self.lo = lo_bound
        self.amax = amax
        self.fcoeffs = [float(c) for c in coeffs]
        self.dcoeffs = [float(i * c) for i, c in enumerate(coeffs)][1:]
        self.w_lo = int_eval(coeffs, lo_bound)

    def solve(self, w, live):
        in_range = live & (w >= self.w_lo)
        if not in_range.any():
            z = np.zeros_like(w)
            return z, in_range, in_range
        lc = self.fcoeffs[-1]
        deg = len(self.coeffs) - 1
        with np.errstate(all="ignore"):
            wf = w.astype(np.float64)
            est = np.power(np.maximum(np.abs(wf) / abs(lc), 1.0), 1.0 / deg)
            x = np.maximum(est * 1.25 + 2.0, float(self.lo))
            x = np.minimum(x, float(self.amax) + 1.0)
            for _ in range(30):
                v = np.zeros_like(x)
                dv = np.zeros_like(x)
                for c in self.fcoeffs[::-1]:
                    dv = dv * x + v
                    v = v * x + c
                step = (v - wf) / np.maximum(dv, 1e-300)
                x = np.maximum(x - step, float(self.lo))
            x = np.clip(x, float(self.lo), float(self.amax) + 1.0)
        a = np.floor(x).astype(np.int64)
        a = np.clip(a, self.lo, self.amax)
        # exact floor-inverse adjustment
        for _ in range(4):
            va = _np_horner(self.coeffs, a)
            a = a - ((va > w) & (a > self.lo)).astype(np.int64)
        for _ in range(4):
            vb = _np_horner(self.coeffs, a + 1)
            a = a + (vb <= w).astype(np.int64)
        ok_floor = (_np_horner(self.coeffs, a) <= w) & (_np_horner(self.coeffs, a + 1) > w)
        certified = ok_floor | ~in_range
        found = in_range & ok_floor & (_np_horner(self.coeffs, a) == w)
        return a, found, in_range & ~certified


class _VecEngine:
    """Chunk evaluator; returns |n| values with a new lift plus a fallback list."""

    def __init__(self, plan: _Plan, max_b_value: int):
        self.plan = plan
        self.ok = True
        self.branches: dict[int, tuple[int, _TailBranch, _TailBranch]] = {}
        max_v = _poly_abs_bound(plan.f_num, max_b_value)
        for hn, qh in plan.graphs:
            if _poly_abs_bound(hn, max_b_value) >= _INT64_SAFE:
                self.ok = False
                return
        for b in plan.bs:
            coeffs = list(plan.gb[b])
            if plan.qg_bm[b] * max_v >= _INT64_SAFE:
                self.ok = False
                return
            wmax = plan.qg_bm[b] * max_v // plan.q_f + 1
            if coeffs[-1] < 0:
                coeffs = [-c for c in coeffs]
                neg_g = True
            else:
                neg_g = False
            deg = len(coeffs) - 1
            T = 1
            for dc in (_deriv(coeffs), _deriv(_deriv(coeffs))):
                if len(dc) > 1:
                    for mark in grid_marks(dc):
                        T = max(T, abs(mark) + 1)
                    # grid marks give floors; pad by one more
                    T += 0
            if T > 16:
                self.ok = False
                return
            lower = max(abs(c) for c in coeffs[:-1]) if deg >= 1 else 0
            amax = 2 + (lower + wmax) // abs(coeffs[-1])
            if _poly_abs_bound(coeffs, amax + 2) >= _INT64_SAFE:
                self.ok = False
                return
            # right tail: P increasing convex on [T, inf)
            right = _TailBranch(coeffs, T, amax)
            # left tail via a -> -a; normalize to positive leading coefficient
            refl = [c * (-1) ** i for i, c in enumerate(coeffs)]
            if refl[-1] < 0:
                refl = [-c for c in refl]
                neg_refl = True
            else:
                neg_refl = False
            left = _TailBranch(refl, T, amax)
            self.branches[b] = (T, right, left, neg_g, neg_refl)

    def run_chunk(self, n0: int, n1: int):
        """Process integers n in [n0, n1); returns (new_n_array, fallback_ns)."""
        plan = self.plan
        n = np.arange(n0, n1, dtype=np.int64)
        v = _np_horner(plan.f_num, n)
        new = np.zeros(n.shape, dtype=bool)
        fallback = np.zeros(n.shape, dtype=bool)
        graph_cache = []
        for hn, qh in plan.graphs:
            hv = _np_horner(hn, n)
            gg = np.gcd(hv, qh)
            graph_cache.append((hv // gg, qh // gg))
        for b in plan.bs:
            t = plan.qg_bm[b] * v
            live = (t % plan.q_f) == 0
            if not live.any():
                continue
            w = np.where(live, t // plan.q_f, 0)
            T, right, left, neg_g, neg_refl = self.branches[b]
            coeffs = right.coeffs  # sign-normalized G_b
            w_signed = -w if neg_g else w
            # turning zone: direct exact checks
            for a0 in range(-T, T + 1):
                if gcd(a0, b) != 1:
                    continue
                val = int_eval(coeffs, a0)
                hits = live & (w_signed == val)
                if hits.any():
                    new |= hits & ~_graph_mask(graph_cache, a0, b, hits)
            # right tail: a > T
            a, found, uncert = right.solve(w_signed, live)
            fallback |= uncert
            found &= np.gcd(a, b) == 1
            found &= a > T
            if found.any():
                new |= found & ~_graph_mask_vec(graph_cache, a, b, found)
            # left tail: a < -T, via reflection
            w_refl = -w_signed if neg_refl else w_signed
            a, found, uncert = left.solve(w_refl, live)
            fallback |= uncert
            a_real = -a
            found &= np.gcd(a_real, b) == 1
            found &= a > T
            if found.any():
                new |= found & ~_graph_mask_vec(graph_cache, a_real, b, found)
        fallback &= ~new
        new_ns = n[new & ~fallback]
        fb_ns = n[fallback]
        return new_ns, fb_ns


def _graph_mask(graph_cache, a0: int, b: int, base):
    mask = np.zeros_like(base)
    for num, den in graph_cache:
        mask |= (num == a0) & (den == b)
    return mask


def _graph_mask_vec(graph_cache, a, b: int, base):
    mask = np.zeros_like(base)
    for num, den in graph_cache:
        mask |= (num == a) & (den == b)
    return mask


def _deriv(coeffs):
    return [i * c for i, c in enumerate(coeffs)][1:]


def _poly_abs_bound(coeffs, x_bound: int) -> int:
    return sum(abs(c) * x_bound**i for i, c in enumerate(coeffs))


# -- public operations ---------------------------------------------------------------


def new_lift_count(f: Poly, g: Poly, H: DecompositionSet, B: int) -> int:
    """#{n : |n| <= B, some rational y has g(y) = f(n) and y is no h(n)}."""
    series = census_curve(f, g, (B,), H=H)
    return series.counts[0]


def new_lift_inputs(f: Poly, g: Poly, H: DecompositionSet, B: int) -> list[int]:
    """The counted inputs themselves (desk scale; exact scalar engine)."""
    plan = _Plan(f, g, H)
    return [n for n in range(-B, B + 1) if plan.has_new_lift(n)]


def census_curve(
    f: Poly,
    g: Poly,
    checkpoints,
    H: DecompositionSet | None = None,
    threads: int | None = None,
    prediction: str | None = None,
    tolerance: float = 0.08,
    theta=None,
) -> CensusSeries:
    """Counts at each checkpoint, one pass over |n| <= max(checkpoints).

    The slope of log(count) against log(B) is fitted over checkpoints with
    count >= 5 once at least three of them exist.
    """
    checkpoints = tuple(int(B) for B in checkpoints)
    if not checkpoints or any(b2 <= b1 for b1, b2 in zip(checkpoints, checkpoints[1:])):
        raise InputError("checkpoints must be strictly increasing")
    if any(B < 1 for B in checkpoints):
        raise InputError("checkpoints must be positive")
    if f.is_constant() or g.is_constant():
        raise InputError("f and g must be nonconstant")
    if H is None:
        H = decompositions(f, g)
    plan = _Plan(f, g, H)
    maxB = checkpoints[-1]
    engine = _VecEngine(plan, maxB)

    if threads is None:
        threads = int(os.environ.get("LIFTSCOPE_THREADS", "1") or "1")
    threads = max(1, threads)

    bounds = list(range(-maxB, maxB + 1, _CHUNK)) + [maxB + 1]
    tasks = list(zip(bounds, bounds[1:]))
    hits: list[int] = []
    if threads > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for chunk_hits in pool.map(
                _chunk_worker, [(plan, engine if engine.ok else None, a, b) for a, b in tasks]
            ):
                hits.extend(chunk_hits)
    else:
        for a, b in tasks:
            hits.extend(_chunk_worker((plan, engine if engine.ok else None, a, b)))
    hit_abs = sorted(abs(n) for n in hits)
    counts = []
    idx = 0
    arr = hit_abs
    for B in checkpoints:
        # linear scan: hit lists are tiny compared to the input range
        while idx < len(arr) and arr[idx] <= B:
            idx += 1
        counts.append(idx)
    slope = residual = None
    fit = _try_fit(checkpoints, counts, theta, tolerance)
    if fit is not None:
        slope, residual = fit.slope, fit.residual
    return CensusSeries(checkpoints, tuple(counts), slope, residual, prediction)


def _chunk_worker(args) -> list[int]:
    plan, engine, a, b = args
    if engine is not None:
        new_ns, fb_ns = engine.run_chunk(a, b)
        out = [int(x) for x in new_ns]
        out.extend(n for n in (int(x) for x in fb_ns) if plan.has_new_lift(n))
        return out
    return [n for n in range(a, b) if plan.has_new_lift(n)]


def _try_fit(checkpoints, counts, theta, tolerance) -> SlopeFit | None:
    try:
        return fit_exponent(
            CensusSeries(tuple(checkpoints), tuple(counts), None, None), theta, tolerance
        )
    except InputError:
        return None


def fit_exponent(series: CensusSeries, theta=None, tolerance: float = 0.08) -> SlopeFit:
    """Least-squares slope of log(count) vs log(B) over checkpoints with
    count >= 5; needs at least three of them.  With a predicted theta, the
    verdict states whether |slope - theta| <= tolerance.
    """
    pts = [(B, c) for B, c in zip(series.checkpoints, series.counts) if c >= 5]
    if len(pts) < 3:
        raise InputError("insufficient data: need 3 checkpoints with count >= 5")
    xs = np.log([float(B) for B, _ in pts])
    ys = np.log([float(c) for _, c in pts])
    slope, intercept = np.polyfit(xs, ys, 1)
    resid = float(np.max(np.abs(ys - (slope * xs + intercept))))
    verdict = None
    if theta is not None:
        target = float(theta)
        ok = abs(slope - target) <= tolerance
        verdict = (
            f"slope {slope:.4f} consistent with predicted exponent {target:.4f}"
            if ok
            else f"slope {slope:.4f} INCONSISTENT with predicted exponent {target:.4f}"
        )
    return SlopeFit(float(slope), resid, len(pts), verdict)


def write_census_csv(series: CensusSeries, path: str) -> None:
    """Two columns: B, count."""
    with open(path, "w") as fh:
        fh.write("B,count\n")
        for B, c in zip(series.checkpoints, series.counts):
            fh.write(f"{B},{c}\n")
