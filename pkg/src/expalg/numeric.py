"""Certified numerics for exponential polynomials.

Provides interval evaluation over boxes (fast float or rigorous rational
backend), an exact sign routine at rational points, certified real root
isolation in one variable, quadtree zero-cell sampling in two variables, and
a Jacobian-minor transversality check for the single-exponential graph
intersection.

Root certificates come in three kinds.  ``SignChange`` encloses a root whose
existence follows from verified opposite signs at the endpoints (and whose
uniqueness from a derivative enclosure excluding zero).  ``NewtonContraction``
marks an exact rational root certified through a derivative enclosure; the
enclosure is the degenerate point interval.  ``UncertifiedTangential`` flags
leftover cells where the function may only touch zero (even multiplicity);
these are reported, never silently dropped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .epoly import EPoly
from .errors import (
    DimensionError,
    DriverError,
    HypothesisViolation,
    InternalInvariantError,
)
from .intervals import (
    Box,
    Interval,
    RatInterval,
    enclose_rational,
    exp_bounds,
    point,
)
from .poly import Poly

#: width at which the isolator starts attempting endpoint-sign certificates
_CERT_WIDTH = Fraction(1, 8)


# ---------------------------------------------------------------------------
# Interval evaluation
# ---------------------------------------------------------------------------


def _poly_on_intervals(a: Poly, xs: Sequence[Interval]) -> Interval:
    acc = point(0.0)
    for mono, c in a.sorted_terms():
        term = enclose_rational(c)
        for iv, e in zip(xs, mono.x):
            if e:
                term = term * iv.pow_int(e)
        acc = acc + term
    return acc


def _poly_on_rat_intervals(a: Poly, xs: Sequence[RatInterval]) -> RatInterval:
    acc = RatInterval.exact_point(0)
    for mono, c in a.sorted_terms():
        term = RatInterval.exact_point(c)
        for iv, e in zip(xs, mono.x):
            if e:
                term = term * iv.pow_int(e)
        acc = acc + term
    return acc


def interval_eval(f: EPoly, box: Box, mode: str = "fast") -> Interval:
    """Enclosure of f over the box.

    ``fast`` uses outward-rounded hardware floats; ``rigorous`` uses rational
    endpoints with a Taylor-enclosed exp (relative enclosure error below
    2^-52), converted outward to a float interval on return.
    """
    if box.dimension != f.n:
        raise DimensionError(f"box dimension {box.dimension} != ambient {f.n}")
    if mode == "fast":
        xs = box.intervals
        acc = point(0.0)
        for spec, a in f.sorted_terms():
            dot = point(0.0)
            for q, iv in zip(spec, xs):
                if q:
                    dot = dot + iv.scale(q)
            acc = acc + _poly_on_intervals(a, xs) * dot.exp()
        return acc
    if mode == "rigorous":
        xs = [
            RatInterval(Fraction(iv.lo), Fraction(iv.hi), exact=True)
            for iv in box.intervals
        ]
        acc = RatInterval.exact_point(0)
        for spec, a in f.sorted_terms():
            dot = RatInterval.exact_point(0)
            for q, iv in zip(spec, xs):
                if q:
                    dot = dot + iv.scale(q)
            acc = acc + _poly_on_rat_intervals(a, xs) * dot.exp()
        return acc.to_float_interval()
    raise ValueError(f"unknown mode {mode!r}")


class TightEvaluator:
    """Box evaluation: natural extension intersected with mean-value forms.

    The mean-value form f(c) + grad f(box) . (box - c) is a sound enclosure
    (mean value theorem along the segment to the midpoint) with quadratic
    instead of linear overestimation in the box width.  On canonical expanded
    polynomials the gradients themselves suffer from heavy interval
    dependency, so their enclosures are computed by the same form one level
    down (Hessian entries by natural extension).  Derivative EPolys are
    computed once per evaluator instance.
    """

    def __init__(self, f: EPoly, mode: str = "fast", order: int = 2):
        self.mode = mode
        self.order = order
        self.derivs: dict[tuple[int, ...], EPoly] = {(): f}
        frontier = [()]
        for _ in range(order):
            new_frontier = []
            for path in frontier:
                base = self.derivs[path]
                for i in range(1, f.n + 1):
                    # d/dx_i commutes, so reuse sorted multi-indices.
                    key = tuple(sorted(path + (i,)))
                    if key not in self.derivs:
                        self.derivs[key] = base.derivative(i)
                    new_frontier.append(key)
            frontier = sorted(set(new_frontier))

    def __call__(self, box: Box) -> Interval:
        return self._eval((), box, self.order)

    def _eval(self, path: tuple[int, ...], box: Box, depth: int) -> Interval:
        g = self.derivs[path]
        nat = interval_eval(g, box, self.mode)
        if depth == 0 or nat.excludes_zero() or nat.width < 1e-14:
            return nat
        mids = tuple(point(iv.mid) for iv in box.intervals)
        mv = interval_eval(g, Box(mids), self.mode)
        for i, (iv, m) in enumerate(zip(box.intervals, mids), start=1):
            if iv.width == 0.0:
                continue
            gi = self._eval(tuple(sorted(path + (i,))), box, depth - 1)
            mv = mv + gi * (iv - m)
        out = nat.intersect(mv)
        if out is None:
            raise InternalInvariantError("sound enclosures are disjoint")
        return out


def _eval_interval_1d(f: EPoly, lo: Fraction, hi: Fraction) -> Interval:
    return interval_eval(
        f, Box((Interval(_f_lo(lo), _f_hi(hi)),)), mode="fast"
    )


def _f_lo(q: Fraction) -> float:
    v = float(q)
    return math.nextafter(v, -math.inf) if Fraction(v) > q else v


def _f_hi(q: Fraction) -> float:
    v = float(q)
    return math.nextafter(v, math.inf) if Fraction(v) < q else v


# ---------------------------------------------------------------------------
# Exact sign at rational points
# ---------------------------------------------------------------------------


def sign_at_rational(f: EPoly, pt: Sequence, max_bits: int = 4096) -> int:
    """Exact sign of f at a rational point: -1, 0 or +1.

    The value is sum_t c_t e^t with distinct rational t and rational c_t
    (``EPoly.coefficient_groups``).  The sum is zero exactly when every c_t
    is zero; otherwise the value is nonzero, so refining rational exp
    enclosures must eventually separate it from zero.
    """
    groups = f.coefficient_groups([Fraction(v) for v in pt])
    if not groups:
        return 0
    bits = 96
    while bits <= max_bits:
        lo = Fraction(0)
        hi = Fraction(0)
        for t, c in groups.items():
            elo, ehi = exp_bounds(t, bits)
            if c >= 0:
                lo += c * elo
                hi += c * ehi
            else:
                lo += c * ehi
                hi += c * elo
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        bits *= 2
    raise InternalInvariantError("sign refinement exhausted precision budget")


# ---------------------------------------------------------------------------
# 1-D root isolation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootCert:
    """Certified enclosure of one real root (or an uncertified leftover)."""

    enclosure: Interval
    kind: str  # SignChange | NewtonContraction | UncertifiedTangential
    residual_bound: float


def default_root_domain(f: EPoly) -> tuple[float, float]:
    """Crude symmetric search domain from the coefficient height.

    Dominant-term growth of exponential polynomials pushes distant real roots
    toward moderate magnitudes; the bound is logged by callers, not claimed
    complete.
    """
    h = max(8, 2 * f.coefficient_height())
    return (-float(h), float(h))


def isolate_roots_1d(
    f: EPoly,
    domain: tuple[float, float] | None = None,
    tol: float = 1e-9,
    max_depth: int = 64,
) -> tuple[list[RootCert], list[RootCert]]:
    """Certified root isolation on a finite interval.

    Adaptive bisection discards subintervals whose interval value excludes
    zero; endpoint signs are exact (``sign_at_rational``), so exact rational
    roots (for instance at 0) are detected and certified as point enclosures.
    Returns (certified, uncertified) lists, both sorted by position, with
    pairwise disjoint certified enclosures of width at most ``tol``.
    """
    if f.n != 1:
        raise DimensionError("root isolation requires a 1-variable input")
    if f.is_zero():
        raise HypothesisViolation("function is identically zero")
    if domain is None:
        domain = default_root_domain(f)
    a = Fraction(domain[0])
    b = Fraction(domain[1])
    if not a < b:
        raise ValueError("domain must be a nonempty interval")
    tol_q = Fraction(tol)
    df = f.derivative(1)
    evaluator = TightEvaluator(f)

    sign_cache: dict[Fraction, int] = {}

    def sgn(x: Fraction) -> int:
        if x not in sign_cache:
            sign_cache[x] = sign_at_rational(f, [x])
        return sign_cache[x]

    exact_roots: list[Fraction] = []
    brackets: list[tuple[Fraction, Fraction]] = []
    suspects: list[tuple[Fraction, Fraction]] = []

    def deriv_nonzero(lo: Fraction, hi: Fraction) -> bool:
        return _eval_interval_1d(df, lo, hi).excludes_zero()

    stack = [(a, b, 0)]
    while stack:
        lo, hi, depth = stack.pop()
        if evaluator(Box((Interval(_f_lo(lo), _f_hi(hi)),))).excludes_zero():
            continue
        width = hi - lo
        if width <= _CERT_WIDTH:
            s_lo, s_hi = sgn(lo), sgn(hi)
            if s_lo == 0 and lo not in exact_roots:
                exact_roots.append(lo)
            if s_hi == 0 and hi not in exact_roots:
                exact_roots.append(hi)
            if deriv_nonzero(lo, hi):
                # Monotone cell: at most one root, position decided by signs.
                if s_lo * s_hi < 0:
                    brackets.append((lo, hi))
                continue
        if width <= tol_q / 4 or depth >= max_depth:
            suspects.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((mid, hi, depth + 1))
        stack.append((lo, mid, depth + 1))

    # Refine brackets first: bisection can land exactly on a rational root,
    # in which case the bracket collapses onto a point handled below.
    refined: list[tuple[Fraction, Fraction]] = []
    for lo, hi in brackets:
        lo, hi = _refine_bracket(f, sgn, lo, hi, tol_q)
        if lo == hi:
            if lo not in exact_roots:
                exact_roots.append(lo)
        else:
            refined.append((lo, hi))

    uncertified: list[RootCert] = []
    for lo, hi in _merge_cells(suspects):
        if any(lo <= r <= hi for r in exact_roots):
            continue  # covered by an exact-root certificate
        s_lo, s_hi = sgn(lo), sgn(hi)
        if s_lo * s_hi < 0:
            rlo, rhi = _refine_bracket(f, sgn, lo, hi, tol_q)
            if rlo == rhi:
                if rlo not in exact_roots:
                    exact_roots.append(rlo)
            else:
                refined.append((rlo, rhi))
        elif deriv_nonzero(lo, hi):
            continue  # monotone, same signs: provably no root
        else:
            enc = Interval(_f_lo(lo), _f_hi(hi))
            uncertified.append(
                RootCert(enc, "UncertifiedTangential", _residual(f, enc))
            )

    certs: list[RootCert] = []
    for x in sorted(set(exact_roots)):
        h = max(tol_q / 2, Fraction(1, 1 << 40))
        if deriv_nonzero(x - h, x + h):
            enc = Interval(_f_lo(x), _f_hi(x))
            certs.append(RootCert(enc, "NewtonContraction", 0.0))
        else:
            enc = Interval(_f_lo(x - h), _f_hi(x + h))
            uncertified.append(
                RootCert(enc, "UncertifiedTangential", _residual(f, enc))
            )
    for lo, hi in refined:
        if any(lo <= r <= hi for r in exact_roots):
            continue
        enc = Interval(_f_lo(lo), _f_hi(hi))
        certs.append(RootCert(enc, "SignChange", _residual(f, enc)))

    certs.sort(key=lambda r: r.enclosure.lo)
    for r1, r2 in zip(certs, certs[1:]):
        if r1.enclosure.hi >= r2.enclosure.lo:
            raise InternalInvariantError("certified enclosures overlap")
    return certs, sorted(uncertified, key=lambda r: r.enclosure.lo)


def _residual(f: EPoly, enc: Interval) -> float:
    return _eval_interval_1d(f, Fraction(enc.lo), Fraction(enc.hi)).mag


def _refine_bracket(f, sgn, lo: Fraction, hi: Fraction, tol: Fraction):
    s_lo, s_hi = sgn(lo), sgn(hi)
    if s_lo * s_hi >= 0:
        raise InternalInvariantError("refine_bracket needs opposite endpoint signs")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        s_mid = sgn(mid)
        if s_mid == 0:
            # Exact rational root in the middle; shrink to the point.
            return mid, mid
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return lo, hi


def _merge_cells(cells: list[tuple[Fraction, Fraction]]):
    merged: list[list[Fraction]] = []
    for lo, hi in sorted(cells):
        if merged and lo <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], hi)
        else:
            merged.append([lo, hi])
    return [(lo, hi) for lo, hi in merged]


def brute_force_sign_scan(
    f: EPoly, domain: tuple[float, float], step: float = 1e-4
) -> int:
    """Independent root count oracle: strict sign changes plus exact grid zeros."""
    lo, hi = domain
    count = 0
    steps = int(round((hi - lo) / step))
    prev = None
    for k in range(steps + 1):
        v = f.eval_float([lo + k * step])
        if v == 0.0:
            count += 1
            prev = None  # do not double-count the crossing around an exact hit
            continue
        if prev is not None and prev * v < 0:
            count += 1
        prev = v
    return count


# ---------------------------------------------------------------------------
# 2-D zero-cell sampling
# ---------------------------------------------------------------------------


def sample_zero_cells_2d(
    f: EPoly, box: Box, max_depth: int, mode: str = "fast"
) -> list[Box]:
    """Quadtree cells at depth ``max_depth`` whose interval value contains 0.

    The union of returned cells is a guaranteed superset of the zero set
    inside the box (inclusion monotonicity of interval evaluation), and cells
    kept at depth d+1 always lie inside cells kept at depth d.  Output is
    sorted by coordinates.
    """
    if f.n != 2:
        raise DimensionError("cell sampling requires a 2-variable input")
    if f.is_zero():
        raise HypothesisViolation("function is identically zero")
    if box.dimension != 2:
        raise DimensionError("box must be 2-dimensional")

    evaluator = TightEvaluator(f, mode)
    out: list[Box] = []
    stack = [(box, 0)]
    while stack:
        cell, depth = stack.pop()
        if not evaluator(cell).contains_zero():
            continue
        if depth >= max_depth:
            out.append(cell)
            continue
        (x, y) = cell.intervals
        xm, ym = x.mid, y.mid
        for xi in (Interval(x.lo, xm), Interval(xm, x.hi)):
            for yi in (Interval(y.lo, ym), Interval(ym, y.hi)):
                stack.append((Box((xi, yi)), depth + 1))
    out.sort(key=lambda c: (c.intervals[0].lo, c.intervals[1].lo))
    return out


# ---------------------------------------------------------------------------
# Transversality at lifted roots (single-exponential graph)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TransversalityReport:
    point: tuple[float, ...]
    jacobian_rank_lower_bound: int
    tangency_margin: float
    verdict: str  # Transverse | Undetermined


def check_transversality(
    p: Poly,
    root: RootCert,
    other_coords: Sequence = (),
    tol: float = 1e-6,
) -> TransversalityReport:
    """Non-tangency of Z(p) and the graph {u1 = e^{x1}} at a lifted root.

    The lifted point is z = (x1, x2.., xn, e^{x1}) with x1 taken from the
    root enclosure and the remaining coordinates supplied exactly.  The check
    compares the gradient rows of p and of u1 - e^{x1}: the reported margin
    is the largest 2x2 Jacobian minor at the midpoint, and the verdict is
    Transverse only when an interval evaluation of that decisive minor over
    the enclosure excludes zero (certified non-parallel gradients).

    Enclosures containing x1 = 0 violate the hypothesis and raise.
    """
    n = p.n
    if any(p.degree_in("u", j) > 0 for j in range(2, n + 1)):
        raise DriverError("transversality check requires dependence on u1 only")
    if len(other_coords) != n - 1:
        raise DimensionError(f"expected {n - 1} extra coordinates")
    enc = root.enclosure
    if enc.contains_zero():
        raise HypothesisViolation(
            "root enclosure contains x1 = 0, excluded by the non-tangency hypothesis"
        )

    x1 = enc.mid
    rest = [float(v) for v in other_coords]
    u = math.exp(x1)
    z = (x1, *rest, u)

    full_mid = [x1, *rest] + [u] + [0.0] * (n - 1)
    grad_p = [p.derivative("x", i).eval(full_mid) for i in range(1, n + 1)]
    grad_p.append(p.derivative("u", 1).eval(full_mid))
    grad_g = [-u] + [0.0] * (n - 1) + [1.0]

    best = (0.0, 0, 1)
    for i in range(n + 1):
        for j in range(i + 1, n + 1):
            minor = grad_p[i] * grad_g[j] - grad_p[j] * grad_g[i]
            if abs(minor) > best[0]:
                best = (abs(minor), i, j)
    margin, bi, bj = best

    # Interval cross-check of the decisive minor over the enclosure.
    x1_iv = enc
    u_iv = x1_iv.exp()
    ivs = [x1_iv] + [point(v) for v in rest] + [u_iv] + [point(0.0)] * (n - 1)
    grad_p_iv = [
        _poly_full_intervals(p.derivative("x", i), ivs) for i in range(1, n + 1)
    ]
    grad_p_iv.append(_poly_full_intervals(p.derivative("u", 1), ivs))
    grad_g_iv = [-u_iv] + [point(0.0)] * (n - 1) + [point(1.0)]
    minor_iv = grad_p_iv[bi] * grad_g_iv[bj] - grad_p_iv[bj] * grad_g_iv[bi]

    transverse = margin > tol and minor_iv.excludes_zero()
    return TransversalityReport(
        point=z,
        jacobian_rank_lower_bound=2 if transverse else 1,
        tangency_margin=margin,
        verdict="Transverse" if transverse else "Undetermined",
    )


def _poly_full_intervals(p: Poly, ivs: Sequence[Interval]) -> Interval:
    acc = point(0.0)
    for mono, c in p.sorted_terms():
        term = enclose_rational(c)
        for iv, e in zip(ivs[: p.n], mono.x):
            if e:
                term = term * iv.pow_int(e)
        for iv, e in zip(ivs[p.n :], mono.u):
            if e:
                term = term * iv.pow_int(e)
        acc = acc + term
    return acc
