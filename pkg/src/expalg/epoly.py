"""Canonical exponential polynomials: finite sums  sum_s A_s(x) * e^(s . x).

The spectrum ``s`` ranges over vectors of rationals of length n and each
coefficient A_s is a nonzero polynomial in x1..xn alone (a ``Poly`` whose
u-exponents are all zero).  The zero function is the empty map.

This canonical form is semantically faithful: exponentials e^(s . x) with
pairwise distinct rational spectra are linearly independent over the
polynomial ring (a Lindemann-Weierstrass style fact), so a function in this
ring vanishes identically on R^n exactly when its canonical term map is
empty.  ``is_zero`` is therefore a decision procedure for identical
vanishing, and no runtime transcendence machinery is needed.

The ring is closed under addition, multiplication (spectra add, coefficients
multiply), partial differentiation (d/dx_i maps A e^(s.x) to
(dA/dx_i + s_i A) e^(s.x)), and restriction to a rational hyperplane through
the origin, which eliminates one variable and in general introduces
fractional spectra.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DimensionError, HyperplaneError
from .hyperplanes import Hyperplane
from .poly import Mono, Poly, RatLike

Spectrum = tuple[Fraction, ...]


def spectrum_key(s: Sequence[Fraction]) -> tuple:
    """Canonical total order on spectra: lex on (numerator, denominator) pairs."""
    return tuple((q.numerator, q.denominator) for q in s)


def _x_only(p: Poly) -> bool:
    return all(all(e == 0 for e in m.u) for m in p.terms)


class EPoly:
    """Exponential polynomial in canonical form (immutable)."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple, Poly] | None = None):
        canon: dict[tuple, Poly] = {}
        if terms:
            for spec, coeff in terms.items():
                spec = tuple(Fraction(q) for q in spec)
                if len(spec) != n:
                    raise DimensionError(f"spectrum length != ambient count {n}")
                if coeff.n != n:
                    raise DimensionError("coefficient ambient != spectrum ambient")
                if not _x_only(coeff):
                    raise ValueError("coefficient polynomials must not use u-variables")
                if coeff.is_zero():
                    continue
                prev = canon.get(spec)
                merged = coeff if prev is None else prev + coeff
                if merged.is_zero():
                    canon.pop(spec, None)
                else:
                    canon[spec] = merged
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", canon)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("EPoly is immutable")

    # -- construction ---------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> EPoly:
        return cls(n, {})

    @classmethod
    def from_poly(cls, p: Poly) -> EPoly:
        """Canonical form of p(x1..xn, e^x1..e^xn): group terms by u-exponents.

        The map is a ring isomorphism onto its image; in particular the
        result is the zero function only for the zero polynomial.
        """
        n = p.n
        grouped: dict[tuple, dict[Mono, Fraction]] = {}
        for mono, c in p.terms.items():
            spec = tuple(Fraction(e) for e in mono.u)
            bucket = grouped.setdefault(spec, {})
            xmono = Mono(mono.x, (0,) * n)
            bucket[xmono] = bucket.get(xmono, Fraction(0)) + c
        return cls(n, {s: Poly(n, b) for s, b in grouped.items()})

    # -- queries ---------------------------------------------------------------

    def is_zero(self) -> bool:
        """Decide whether the function vanishes identically on R^n."""
        return not self.terms

    def sorted_terms(self) -> list[tuple[tuple, Poly]]:
        return sorted(self.terms.items(), key=lambda kv: spectrum_key(kv[0]))

    def spectra(self) -> list[tuple]:
        return [s for s, _ in self.sorted_terms()]

    def coefficient_height(self) -> int:
        return max((a.coefficient_height() for a in self.terms.values()), default=0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        return f"EPoly(n={self.n}, terms={len(self.terms)})"

    # -- ring operations --------------------------------------------------------

    def _check_same_ambient(self, other: EPoly) -> None:
        if self.n != other.n:
            raise DimensionError(f"ambient mismatch: {self.n} != {other.n}")

    def __add__(self, other: EPoly) -> EPoly:
        self._check_same_ambient(other)
        out = dict(self.terms)
        for spec, coeff in other.terms.items():
            prev = out.get(spec)
            merged = coeff if prev is None else prev + coeff
            if merged.is_zero():
                out.pop(spec, None)
            else:
                out[spec] = merged
        return EPoly(self.n, out)

    def __neg__(self) -> EPoly:
        return EPoly(self.n, {s: -a for s, a in self.terms.items()})

    def __sub__(self, other: EPoly) -> EPoly:
        return self + (-other)

    def __mul__(self, other: EPoly) -> EPoly:
        self._check_same_ambient(other)
        out: dict[tuple, Poly] = {}
        for s1, a1 in self.terms.items():
            for s2, a2 in other.terms.items():
                spec = tuple(q1 + q2 for q1, q2 in zip(s1, s2))
                prod = a1 * a2
                prev = out.get(spec)
                merged = prod if prev is None else prev + prod
                if merged.is_zero():
                    out.pop(spec, None)
                else:
                    out[spec] = merged
        return EPoly(self.n, out)

    def scale(self, c: RatLike) -> EPoly:
        c = Fraction(c)
        if not c:
            return EPoly.zero(self.n)
        return EPoly(self.n, {s: a.scale(c) for s, a in self.terms.items()})

    # -- calculus ----------------------------------------------------------------

    def derivative(self, i: int) -> EPoly:
        """Exact partial derivative with respect to x_i (1-based)."""
        if not 1 <= i <= self.n:
            raise DimensionError(f"variable index {i} out of range 1..{self.n}")
        out: dict[tuple, Poly] = {}
        for spec, a in self.terms.items():
            da = a.derivative("x", i) + a.scale(spec[i - 1])
            if da.is_zero():
                continue
            prev = out.get(spec)
            merged = da if prev is None else prev + da
            if merged.is_zero():
                out.pop(spec, None)
            else:
                out[spec] = merged
        return EPoly(self.n, out)

    # -- restriction ---------------------------------------------------------------

    def restrict(self, m: Hyperplane) -> EPoly:
        """Restriction to the hyperplane {m . x = 0}, as an EPoly in n-1 variables.

        The pivot variable x_a with |m_a| maximal (ties: smallest index) is
        eliminated via x_a = -(1/m_a) * sum_{j != a} m_j x_j, which keeps the
        substitution coefficients at most 1 in absolute value.  Spectra map to
        s'_j = s_j - s_a m_j / m_a, so rational entries appear; coefficients
        with equal restricted spectra are merged exactly.

        The result is the zero EPoly exactly when the original function
        vanishes on the whole hyperplane.
        """
        if m.dimension != self.n:
            raise DimensionError("hyperplane dimension != ambient count")
        if self.n == 0:
            raise HyperplaneError("no variables to restrict")
        normal = m.normal
        pivot = max(range(self.n), key=lambda j: (abs(normal[j]), -j))
        rest = [j for j in range(self.n) if j != pivot]
        k = self.n - 1

        # x_pivot, written in the n-1 remaining variables.
        form = Poly.zero(k)
        for new_j, j in enumerate(rest):
            if normal[j]:
                form = form + Poly.x_var(k, new_j + 1).scale(
                    Fraction(-normal[j], normal[pivot])
                )
        powers: dict[int, Poly] = {0: Poly.const(k, 1)}

        def form_pow(e: int) -> Poly:
            while e not in powers:
                top = max(powers)
                powers[top + 1] = powers[top] * form
            return powers[e]

        out: dict[tuple, Poly] = {}
        for spec, a in self.terms.items():
            new_spec = tuple(
                spec[j] - spec[pivot] * Fraction(normal[j], normal[pivot]) for j in rest
            )
            restricted = Poly.zero(k)
            for mono, c in a.terms.items():
                e = mono.x[pivot]
                stripped = Mono(tuple(mono.x[j] for j in rest), (0,) * k)
                restricted = restricted + (Poly(k, {stripped: c}) * form_pow(e))
            if restricted.is_zero():
                continue
            prev = out.get(new_spec)
            merged = restricted if prev is None else prev + restricted
            if merged.is_zero():
                out.pop(new_spec, None)
            else:
                out[new_spec] = merged
        return EPoly(k, out)

    # -- evaluation -------------------------------------------------------------

    def eval_float(self, point: Sequence[float]) -> float:
        """Floating-point value at a point of n coordinates."""
        if len(point) != self.n:
            raise DimensionError(f"point length {len(point)} != {self.n}")
        full = list(point) + [0.0] * self.n  # u-block unused in coefficients
        acc = 0.0
        for spec, a in self.terms.items():
            dot = sum(float(q) * v for q, v in zip(spec, point))
            acc += a.eval(full) * math.exp(dot)
        return acc

    def coefficient_groups(
        self, point: Sequence[RatLike]
    ) -> dict[Fraction, Fraction]:
        """Exact value structure at a rational point: f(point) = sum_t c_t e^t.

        Groups the terms by the exact rational exponent t = s . point and sums
        the coefficient values; zero sums are dropped.  Since the e^t with
        distinct rational t are linearly independent over Q, the returned map
        is empty exactly when f(point) = 0.
        """
        if len(point) != self.n:
            raise DimensionError(f"point length {len(point)} != {self.n}")
        pt = [Fraction(v) for v in point]
        full = pt + [Fraction(0)] * self.n
        groups: dict[Fraction, Fraction] = {}
        for spec, a in self.terms.items():
            t = sum((q * v for q, v in zip(spec, pt)), Fraction(0))
            val = a.eval(full)
            s = groups.get(t, Fraction(0)) + val
            if s:
                groups[t] = s
            else:
                groups.pop(t, None)
        return groups
