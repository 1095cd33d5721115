"""Seeded random generators shared by the test modules."""

from __future__ import annotations

import random
from fractions import Fraction

from expalg.poly import Mono, Poly


def rand_fraction(rng: random.Random, span: int = 6, den: int = 4) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def rand_poly(
    rng: random.Random,
    n: int,
    max_terms: int = 4,
    max_exp: int = 2,
    allow_u: bool = True,
) -> Poly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        x = tuple(rng.randint(0, max_exp) for _ in range(n))
        u = tuple(rng.randint(0, max_exp) if allow_u else 0 for _ in range(n))
        c = rand_fraction(rng)
        if c:
            terms[Mono(x, u)] = terms.get(Mono(x, u), Fraction(0)) + c
    return Poly(n, terms)


def rand_nonzero_poly(rng: random.Random, n: int, **kw) -> Poly:
    while True:
        p = rand_poly(rng, n, **kw)
        if not p.is_zero():
            return p


def rand_point(rng: random.Random, count: int, span: int = 3) -> list[Fraction]:
    return [rand_fraction(rng, span=span, den=5) for _ in range(count)]


def embed_on_hyperplane(normal: tuple[int, ...], rest_values) -> list[float]:
    """Point of {normal . x = 0} with the non-pivot coordinates given."""
    n = len(normal)
    pivot = max(range(n), key=lambda j: (abs(normal[j]), -j))
    rest = [j for j in range(n) if j != pivot]
    full = [0.0] * n
    for value, j in zip(rest_values, rest):
        full[j] = value
    full[pivot] = -sum(normal[j] * full[j] for j in rest) / normal[pivot]
    return full
