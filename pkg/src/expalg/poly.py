"""Exact sparse polynomials over Q in the paired variable blocks x1..xn, u1..un.

A polynomial stores a map from monomials to nonzero rational coefficients.
A monomial is a pair of exponent tuples, one for the x-block and one for the
u-block, both of length ``n`` (the ambient variable count, fixed per
polynomial).  The zero polynomial is the empty map.

Coefficients are ``fractions.Fraction``: arithmetic is exact, canonical forms
are unique, and equality testing is reliable.  Instances are immutable after
construction; every operation returns a new polynomial in canonical form
(no stored zero coefficients), so values can be shared freely between
threads.

Variable indices in the public API are 1-based, matching the conventional
names x1..xn and u1..un used by the text syntax.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Mapping, NamedTuple, Sequence, Union

from .errors import DimensionError

Rat = Fraction
RatLike = Union[int, Fraction]


class Mono(NamedTuple):
    """Monomial exponents: ``x[i]`` is the power of x_{i+1}, ``u[i]`` of u_{i+1}."""

    x: tuple[int, ...]
    u: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.x) + sum(self.u)


def grlex_key(m: Mono) -> tuple:
    """Graded lexicographic sort key: total degree first, then lex on (x, u)."""
    return (m.degree, m.x, m.u)


def _as_rat(c: RatLike) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Poly:
    """Multivariate polynomial over Q in x1..xn, u1..un (sparse, canonical)."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Mono, RatLike] | None = None):
        if n < 0:
            raise ValueError("ambient variable count must be non-negative")
        canon: dict[Mono, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                if len(mono.x) != n or len(mono.u) != n:
                    raise DimensionError(
                        f"monomial exponent length != ambient count {n}: {mono}"
                    )
                if any(e < 0 for e in mono.x) or any(e < 0 for e in mono.u):
                    raise ValueError(f"negative exponent in monomial {mono}")
                c = _as_rat(coeff)
                if c:
                    prev = canon.get(mono)
                    canon[mono] = prev + c if prev is not None else c
                    if not canon[mono]:
                        del canon[mono]
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", canon)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> Poly:
        return cls(n, {})

    @classmethod
    def const(cls, n: int, value: RatLike) -> Poly:
        return cls(n, {Mono((0,) * n, (0,) * n): _as_rat(value)})

    @classmethod
    def x_var(cls, n: int, i: int) -> Poly:
        """The polynomial x_i (1-based index)."""
        _check_index(n, i)
        e = [0] * n
        e[i - 1] = 1
        return cls(n, {Mono(tuple(e), (0,) * n): Fraction(1)})

    @classmethod
    def u_var(cls, n: int, i: int) -> Poly:
        """The polynomial u_i (1-based index)."""
        _check_index(n, i)
        e = [0] * n
        e[i - 1] = 1
        return cls(n, {Mono((0,) * n, tuple(e)): Fraction(1)})

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m.degree == 0 for m in self.terms)

    def constant_value(self) -> Fraction:
        """Value of a constant polynomial (0 for the zero polynomial)."""
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()), Fraction(0))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((m.degree for m in self.terms), default=-1)

    def degree_in(self, kind: str, i: int) -> int:
        """Degree in a single variable; 0 if absent, -1 for the zero polynomial."""
        pos = _var_pos(self.n, kind, i)
        if not self.terms:
            return -1
        return max((m.x if kind == "x" else m.u)[pos] for m in self.terms)

    def variables_used(self) -> set[tuple[str, int]]:
        """The (kind, index) pairs of variables with positive degree."""
        used: set[tuple[str, int]] = set()
        for m in self.terms:
            for i, e in enumerate(m.x):
                if e:
                    used.add(("x", i + 1))
            for i, e in enumerate(m.u):
                if e:
                    used.add(("u", i + 1))
        return used

    def u_exponent_vectors(self) -> set[tuple[int, ...]]:
        """Distinct u-block exponent vectors appearing in the polynomial."""
        return {m.u for m in self.terms}

    def coefficient_height(self) -> int:
        """Max of |numerator| and denominator over all coefficients (0 if zero)."""
        h = 0
        for c in self.terms.values():
            h = max(h, abs(c.numerator), c.denominator)
        return h

    def sorted_terms(self) -> list[tuple[Mono, Fraction]]:
        """Terms in decreasing graded-lex order (canonical iteration order)."""
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def leading_term(self) -> tuple[Mono, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self.terms, key=grlex_key)
        return mono, self.terms[mono]

    # -- ring operations -----------------------------------------------------

    def _check_same_ambient(self, other: Poly) -> None:
        if self.n != other.n:
            raise DimensionError(f"ambient mismatch: {self.n} != {other.n}")

    def __add__(self, other: Poly) -> Poly:
        self._check_same_ambient(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, Fraction(0)) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return Poly(self.n, out)

    def __neg__(self) -> Poly:
        return Poly(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        self._check_same_ambient(other)
        out: dict[Mono, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = Mono(
                    tuple(a + b for a, b in zip(m1.x, m2.x)),
                    tuple(a + b for a, b in zip(m1.u, m2.u)),
                )
                s = out.get(mono, Fraction(0)) + c1 * c2
                if s:
                    out[mono] = s
                else:
                    out.pop(mono, None)
        return Poly(self.n, out)

    def __pow__(self, k: int) -> Poly:
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def scale(self, c: RatLike) -> Poly:
        c = _as_rat(c)
        if not c:
            return Poly.zero(self.n)
        return Poly(self.n, {m: c * v for m, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None  # mutable-dict backed; not hashable

    def __repr__(self) -> str:
        return f"Poly(n={self.n}, terms={len(self.terms)})"

    # -- evaluation and calculus ----------------------------------------------

    def eval(self, point: Sequence) -> Fraction | float:
        """Evaluate at a point of 2n numbers, ordered (x1..xn, u1..un).

        Exact when the point entries are Fractions/ints; float inputs give a
        float result.
        """
        if len(point) != 2 * self.n:
            raise DimensionError(f"point length {len(point)} != {2 * self.n}")
        xs = point[: self.n]
        us = point[self.n :]
        acc = None
        for mono, c in self.terms.items():
            term = c
            for v, e in zip(xs, mono.x):
                if e:
                    term = term * v**e
            for v, e in zip(us, mono.u):
                if e:
                    term = term * v**e
            acc = term if acc is None else acc + term
        return acc if acc is not None else Fraction(0)

    def derivative(self, kind: str, i: int) -> Poly:
        """Exact formal partial derivative with respect to x_i or u_i."""
        pos = _var_pos(self.n, kind, i)
        out: dict[Mono, Fraction] = {}
        for mono, c in self.terms.items():
            exps = mono.x if kind == "x" else mono.u
            e = exps[pos]
            if e == 0:
                continue
            new = list(exps)
            new[pos] = e - 1
            m2 = Mono(tuple(new), mono.u) if kind == "x" else Mono(mono.x, tuple(new))
            out[m2] = out.get(m2, Fraction(0)) + c * e
        return Poly(self.n, out)

    def substitute_affine(
        self,
        kind: str,
        i: int,
        coeffs: Sequence[RatLike],
        const: RatLike = 0,
    ) -> Poly:
        """Replace one variable by an affine form and expand canonically.

        ``coeffs`` has one entry per ambient variable, ordered
        (x1..xn, u1..un); the entry for the substituted variable itself is
        allowed (the identity substitution uses coefficient 1 there).
        """
        pos = _var_pos(self.n, kind, i)
        if len(coeffs) != 2 * self.n:
            raise DimensionError(f"affine form needs {2 * self.n} coefficients")
        form = Poly.const(self.n, const)
        for j, c in enumerate(coeffs):
            c = _as_rat(c)
            if not c:
                continue
            var = (
                Poly.x_var(self.n, j + 1)
                if j < self.n
                else Poly.u_var(self.n, j - self.n + 1)
            )
            form = form + var.scale(c)

        powers: dict[int, Poly] = {0: Poly.const(self.n, 1)}

        def form_pow(k: int) -> Poly:
            while k not in powers:
                top = max(powers)
                powers[top + 1] = powers[top] * form
            return powers[k]

        out = Poly.zero(self.n)
        for mono, c in self.terms.items():
            exps = mono.x if kind == "x" else mono.u
            k = exps[pos]
            stripped = list(exps)
            stripped[pos] = 0
            rest = (
                Mono(tuple(stripped), mono.u)
                if kind == "x"
                else Mono(mono.x, tuple(stripped))
            )
            out = out + (Poly(self.n, {rest: c}) * form_pow(k))
        return out

    def substitute_value(self, kind: str, i: int, value: RatLike) -> Poly:
        """Replace one variable by a rational constant."""
        return self.substitute_affine(kind, i, [0] * (2 * self.n), value)

    # -- content helpers -------------------------------------------------------

    def monomial_content(self) -> Mono:
        """Componentwise minimum exponent vector over all terms (the monomial gcd)."""
        if not self.terms:
            return Mono((0,) * self.n, (0,) * self.n)
        monos = list(self.terms)
        minx = tuple(min(m.x[j] for m in monos) for j in range(self.n))
        minu = tuple(min(m.u[j] for m in monos) for j in range(self.n))
        return Mono(minx, minu)

    def rational_content(self) -> Fraction:
        """gcd of numerators over lcm of denominators, with the leading sign."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator))
            den = lcm(den, c.denominator)
        content = Fraction(num, den)
        _, lead = self.leading_term()
        return content if lead > 0 else -content


def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise DimensionError(f"variable index {i} out of range 1..{n}")


def _var_pos(n: int, kind: str, i: int) -> int:
    if kind not in ("x", "u"):
        raise ValueError(f"variable kind must be 'x' or 'u', got {kind!r}")
    _check_index(n, i)
    return i - 1
