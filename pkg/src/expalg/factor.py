"""Exact univariate polynomial factorization over Q, plus dense helpers.

Dense polynomials are coefficient lists indexed by degree (``f[k]`` is the
coefficient of ``x^k``), either Fractions or plain ints depending on context;
the zero polynomial is the empty list.

Factorization follows the classical route:

  rational content  ->  monomial part x^k  ->  Yun square-free decomposition
  ->  per square-free part: factor modulo a suitable odd prime
      (distinct-degree + equal-degree splitting), Hensel lift the factors
      past the Landau-Mignotte coefficient bound, recombine subsets by exact
      trial division.

Returned irreducible factors are primitive integer polynomials with positive
leading coefficient; ``content * prod(factor^mult)`` reproduces the input
exactly, and the function verifies that identity before returning.

A deterministic RNG (seeded from the input coefficients) drives the
equal-degree splitting, so results are reproducible across runs.

The module also provides Sturm-chain real-root counting, used to decide
which irreducible factors have real zeros.
"""

from __future__ import annotations

import hashlib
import random
from fractions import Fraction
from itertools import combinations
from math import gcd, isqrt
from typing import Sequence

from .errors import InternalInvariantError
from .poly import Mono, Poly

Dense = "list[Fraction]"


# ---------------------------------------------------------------------------
# Dense arithmetic over Q (works unchanged for ints where noted)
# ---------------------------------------------------------------------------


def dtrim(f: list) -> list:
    while f and not f[-1]:
        f.pop()
    return f


def ddeg(f: list) -> int:
    return len(f) - 1


def dadd(a: list, b: list) -> list:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return dtrim(out)


def dneg(a: list) -> list:
    return [-c for c in a]


def dsub(a: list, b: list) -> list:
    return dadd(a, dneg(b))


def dmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if not c:
            continue
        for j, d in enumerate(b):
            if d:
                out[i + j] += c * d
    return dtrim(out)


def dscale(a: list, c) -> list:
    if not c:
        return []
    return [v * c for v in a]


def dpow(a: list, k: int) -> list:
    out = [1]
    base = list(a)
    while k:
        if k & 1:
            out = dmul(out, base)
        k >>= 1
        if k:
            base = dmul(base, base)
    return out


def dderiv(a: list) -> list:
    return dtrim([a[i] * i for i in range(1, len(a))])


def deval(a: list, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def ddivmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple[list, list]:
    """Division with remainder over Q; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    rem = [Fraction(c) for c in a]
    quo = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / Fraction(b[-1])
    while len(rem) >= len(b) and dtrim(rem):
        shift = len(rem) - len(b)
        factor = rem[-1] * inv_lead
        quo[shift] = factor
        for i, c in enumerate(b):
            rem[shift + i] -= factor * c
        rem.pop()
        dtrim(rem)
    return dtrim(quo), dtrim(rem)


def dgcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list:
    """Monic gcd over Q (1 for coprime inputs, [] only if both are zero)."""
    fa = dtrim([Fraction(c) for c in a])
    fb = dtrim([Fraction(c) for c in b])
    while fb:
        fa, fb = fb, ddivmod(fa, fb)[1]
    if not fa:
        return []
    return dscale(fa, 1 / fa[-1])


def dprimitive(f: Sequence[Fraction]) -> tuple[Fraction, list[int]]:
    """Split off the rational content: f = content * primitive-int-part, lc > 0."""
    f = dtrim([Fraction(c) for c in f])
    if not f:
        return Fraction(0), []
    den = 1
    for c in f:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in f]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    sign = 1 if ints[-1] > 0 else -1
    prim = [c // (sign * g) for c in ints]
    return Fraction(sign * g, den), prim


# ---------------------------------------------------------------------------
# Arithmetic in GF(p)[x]
# ---------------------------------------------------------------------------


def gf_trunc(f: Sequence[int], p: int) -> list[int]:
    return dtrim([c % p for c in f])


def gf_add(a, b, p):
    return dtrim([c % p for c in dadd(list(a), list(b))])


def gf_sub(a, b, p):
    return dtrim([c % p for c in dsub(list(a), list(b))])


def gf_mul(a, b, p):
    return dtrim([c % p for c in dmul(list(a), list(b))])


def gf_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("gf division by zero")
    rem = [c % p for c in a]
    quo = [0] * max(0, len(a) - len(b) + 1)
    inv = pow(b[-1] % p, -1, p)
    while len(rem) >= len(b) and dtrim(rem):
        shift = len(rem) - len(b)
        factor = rem[-1] * inv % p
        quo[shift] = factor
        for i, c in enumerate(b):
            rem[shift + i] = (rem[shift + i] - factor * c) % p
        rem.pop()
        dtrim(rem)
    return dtrim(quo), dtrim(rem)


def gf_rem(a, b, p):
    return gf_divmod(a, b, p)[1]


def gf_monic(f, p):
    f = gf_trunc(f, p)
    if not f:
        return f
    inv = pow(f[-1], -1, p)
    return [c * inv % p for c in f]


def gf_gcd(a, b, p):
    a, b = gf_trunc(a, p), gf_trunc(b, p)
    while b:
        a, b = b, gf_rem(a, b, p)
    return gf_monic(a, p)


def gf_gcdex(a, b, p):
    """Extended gcd: returns (s, t) with s*a + t*b = 1 for coprime a, b."""
    r0, r1 = gf_trunc(a, p), gf_trunc(b, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = gf_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, gf_sub(s0, gf_mul(q, s1, p), p)
        t0, t1 = t1, gf_sub(t0, gf_mul(q, t1, p), p)
    if ddeg(r0) != 0:
        raise ValueError("gf_gcdex requires coprime inputs")
    inv = pow(r0[0], -1, p)
    return [c * inv % p for c in s0], [c * inv % p for c in t0]


def gf_pow_mod(base, e: int, mod, p):
    result = [1]
    base = gf_rem(base, mod, p)
    while e:
        if e & 1:
            result = gf_rem(gf_mul(result, base, p), mod, p)
        e >>= 1
        if e:
            base = gf_rem(gf_mul(base, base, p), mod, p)
    return result


def gf_is_squarefree(f, p) -> bool:
    return ddeg(gf_gcd(f, gf_trunc(dderiv(list(f)), p), p)) == 0


def gf_factor_squarefree(f, p: int, rng: random.Random) -> list[list[int]]:
    """Irreducible monic factors of a monic square-free f in GF(p)[x], p odd."""
    factors: list[list[int]] = []
    f = gf_monic(f, p)
    x = [0, 1]
    h = x
    d = 0
    while ddeg(f) > 0:
        d += 1
        if 2 * d > ddeg(f):
            factors.append(f)
            break
        h = gf_pow_mod(h, p, f, p)
        g = gf_gcd(gf_sub(h, x, p), f, p)
        if ddeg(g) > 0:
            factors.extend(_gf_equal_degree(g, d, p, rng))
            f, _ = gf_divmod(f, g, p)
            h = gf_rem(h, f, p)
        if ddeg(f) == 0:
            break
    return sorted(factors, key=lambda q: (ddeg(q), tuple(q)))


def _gf_equal_degree(g, d: int, p: int, rng: random.Random) -> list[list[int]]:
    """Cantor-Zassenhaus splitting: all factors of g have degree exactly d."""
    if ddeg(g) == d:
        return [gf_monic(g, p)]
    exponent = (p**d - 1) // 2
    while True:
        r = gf_trunc([rng.randrange(p) for _ in range(ddeg(g))], p)
        if ddeg(r) < 1:
            continue
        w = gf_gcd(r, g, p)
        if 0 < ddeg(w) < ddeg(g):
            pass  # lucky gcd split
        else:
            s = gf_sub(gf_pow_mod(r, exponent, g, p), [1], p)
            w = gf_gcd(s, g, p)
            if not 0 < ddeg(w) < ddeg(g):
                continue
        rest, _ = gf_divmod(g, w, p)
        return _gf_equal_degree(w, d, p, rng) + _gf_equal_degree(rest, d, p, rng)


# ---------------------------------------------------------------------------
# Hensel lifting (quadratic steps, symmetric representation)
# ---------------------------------------------------------------------------


def _sym_trunc(f: Sequence[int], m: int) -> list[int]:
    out = []
    half = m // 2
    for c in f:
        c %= m
        if c > half:
            c -= m
        out.append(c)
    return dtrim(out)


def _gf_to_sym(f, p):
    return _sym_trunc(gf_trunc(f, p), p)


def _zdivmod(a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int]]:
    # Integer division by a monic divisor (exact in each step).
    if not b:
        raise ZeroDivisionError
    if b[-1] != 1:
        raise ValueError("integer division requires a monic divisor")
    rem = list(a)
    quo = [0] * max(0, len(a) - len(b) + 1)
    while len(rem) >= len(b) and dtrim(rem):
        shift = len(rem) - len(b)
        factor = rem[-1]
        quo[shift] = factor
        for i, c in enumerate(b):
            rem[shift + i] -= factor * c
        rem.pop()
        dtrim(rem)
    return dtrim(quo), dtrim(rem)


def _hensel_step(m, f, g, h, s, t):
    """One quadratic lift: from f = g*h (mod m), s*g + t*h = 1 (mod m),
    to the same relations mod m^2, with h monic."""
    mm = m * m
    e = _sym_trunc(dsub(f, dmul(g, h)), mm)
    q, r = _zdivmod(dmul(s, e), h)
    q, r = _sym_trunc(q, mm), _sym_trunc(r, mm)
    u = dadd(dmul(t, e), dmul(q, g))
    big_g = _sym_trunc(dadd(g, u), mm)
    big_h = _sym_trunc(dadd(h, r), mm)
    u = dadd(dmul(s, big_g), dmul(t, big_h))
    b = _sym_trunc(dsub(u, [1]), mm)
    c, d = _zdivmod(dmul(s, b), big_h)
    c, d = _sym_trunc(c, mm), _sym_trunc(d, mm)
    u = dadd(dmul(t, b), dmul(c, big_g))
    big_s = _sym_trunc(dsub(s, d), mm)
    big_t = _sym_trunc(dsub(t, u), mm)
    return big_g, big_h, big_s, big_t


def _hensel_lift(p: int, f: list[int], modular: list[list[int]], l: int) -> list[list[int]]:
    """Lift f = lc(f) * prod(modular) (mod p) to a factorization mod p^l."""
    r = len(modular)
    lc = f[-1]
    if r == 1:
        inv = pow(lc % p**l, -1, p**l)
        return [_sym_trunc(dscale(f, inv), p**l)]
    m = p
    k = r // 2
    d = max(1, (l - 1).bit_length())
    g = [lc % p]
    for q in modular[:k]:
        g = gf_mul(g, q, p)
    h = modular[k]
    for q in modular[k + 1 :]:
        h = gf_mul(h, q, p)
    s, t = gf_gcdex(g, h, p)
    g, h = _gf_to_sym(g, p), _gf_to_sym(h, p)
    s, t = _gf_to_sym(s, p), _gf_to_sym(t, p)
    for _ in range(d):
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m
    return _hensel_lift(p, g, modular[:k], l) + _hensel_lift(p, h, modular[k:], l)


# ---------------------------------------------------------------------------
# Zassenhaus over Z
# ---------------------------------------------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _factor_squarefree_int(f: list[int], rng: random.Random) -> list[list[int]]:
    """Irreducible factors of a primitive square-free integer polynomial, lc > 0."""
    n = ddeg(f)
    if n <= 0:
        return []
    if n == 1:
        return [f]
    lc = f[-1]
    max_norm = max(abs(c) for c in f)
    # Landau-Mignotte style bound on coefficients of any factor, times lc.
    bound = (isqrt(n + 1) + 1) * (1 << n) * max_norm * abs(lc)

    candidates = []
    p = 3
    while len(candidates) < 3 and p < 10000:
        if _is_prime(p) and lc % p != 0:
            fp = gf_trunc(f, p)
            if ddeg(fp) == n and ddeg(gf_gcd(fp, gf_trunc(dderiv(f), p), p)) == 0:
                candidates.append((p, gf_factor_squarefree(gf_monic(fp, p), p, rng)))
                if len(candidates[-1][1]) == 1:
                    break
        p += 2
    if not candidates:
        raise InternalInvariantError("no admissible prime found for factorization")
    p, modular = min(candidates, key=lambda c: len(c[1]))
    if len(modular) == 1:
        return [f]

    l = 1
    pl = p
    while pl <= 2 * bound:
        pl *= p
        l += 1
    lifted = _hensel_lift(p, f, modular, l)

    # Subset recombination with exact trial division.
    factors: list[list[int]] = []
    remaining = list(range(len(lifted)))
    current = f
    size = 1
    while 2 * size <= len(remaining):
        found = False
        for subset in combinations(remaining, size):
            cand = [current[-1]]
            for i in subset:
                cand = dmul(cand, lifted[i])
            cand = _sym_trunc(cand, pl)
            _, cand = dprimitive(cand)
            if not cand:
                continue
            quo, rem = ddivmod([Fraction(c) for c in current], [Fraction(c) for c in cand])
            if not rem:
                factors.append(cand)
                _, current = dprimitive(quo)
                remaining = [i for i in remaining if i not in subset]
                found = True
                break
        if not found:
            size += 1
    if ddeg(current) > 0:
        factors.append(current)
    return sorted(factors, key=lambda q: (ddeg(q), tuple(q)))


def squarefree_decomposition(f: Sequence[Fraction]) -> list[tuple[list[Fraction], int]]:
    """Yun's algorithm: monic square-free parts with multiplicities."""
    f = dtrim([Fraction(c) for c in f])
    df = dderiv(f)
    g = dgcd(f, df)
    if ddeg(g) <= 0:
        return [(dscale(f, 1 / f[-1]), 1)]
    b, _ = ddivmod(f, g)
    c, _ = ddivmod(df, g)
    d = dsub(c, dderiv(b))
    out: list[tuple[list[Fraction], int]] = []
    i = 1
    while ddeg(b) > 0:
        a = dgcd(b, d)
        if ddeg(a) > 0:
            out.append((a, i))
        b, _ = ddivmod(b, a)
        c, _ = ddivmod(d, a)
        d = dsub(c, dderiv(b))
        i += 1
    return out


def _stable_rng(coeffs: Sequence[int]) -> random.Random:
    blob = repr(tuple(coeffs)).encode()
    seed = int.from_bytes(hashlib.sha256(blob).digest()[:8], "big")
    return random.Random(seed)


def factor_dense(f: Sequence[Fraction]) -> tuple[Fraction, list[tuple[list[int], int]]]:
    """Full factorization over Q of a dense rational polynomial.

    Returns (content, [(primitive integer factor, multiplicity), ...]) with
    content * prod(factor^mult) == f exactly (verified).  Factors have
    positive leading coefficients and are sorted by (degree, coefficients).
    """
    f = dtrim([Fraction(c) for c in f])
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    if ddeg(f) == 0:
        return f[0], []

    work = list(f)
    factors: list[tuple[list[int], int]] = []
    shift = 0
    while not work[0]:
        work.pop(0)
        shift += 1
    if shift:
        factors.append(([0, 1], shift))

    if ddeg(work) > 0:
        rng = _stable_rng([c.numerator for c in work] + [c.denominator for c in work])
        for part, mult in squarefree_decomposition(work):
            _, prim = dprimitive(part)
            for irr in _factor_squarefree_int(prim, rng):
                factors.append((irr, mult))

    factors.sort(key=lambda fm: (ddeg(fm[0]), tuple(fm[0]), fm[1]))
    lead_prod = 1
    for fac, mult in factors:
        lead_prod *= fac[-1] ** mult
    content = f[-1] / lead_prod

    check = [content]
    for fac, mult in factors:
        check = dmul(check, dpow([Fraction(c) for c in fac], mult))
    if dtrim(check) != f:
        raise InternalInvariantError("factorization does not reproduce the input")
    return content, factors


# ---------------------------------------------------------------------------
# Sturm real-root counting
# ---------------------------------------------------------------------------


def sturm_chain(f: Sequence[Fraction]) -> list[list[Fraction]]:
    chain = [dtrim([Fraction(c) for c in f])]
    chain.append(dderiv(chain[0]))
    while chain[-1]:
        rem = ddivmod(chain[-2], chain[-1])[1]
        if not rem:
            break
        chain.append(dneg(rem))
    return [c for c in chain if c]


def _variations(signs: Sequence[int]) -> int:
    filtered = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(filtered, filtered[1:]) if a * b < 0)


def count_real_roots(f: Sequence[Fraction]) -> int:
    """Number of distinct real roots (Sturm; input need not be square-free)."""
    f = dtrim([Fraction(c) for c in f])
    if not f or ddeg(f) == 0:
        return 0
    g = dgcd(f, dderiv(f))
    if ddeg(g) > 0:
        f, _ = ddivmod(f, g)
    chain = sturm_chain(f)
    at_minus = [(1 if c[-1] > 0 else -1) * (-1) ** ddeg(c) for c in chain]
    at_plus = [1 if c[-1] > 0 else -1 for c in chain]
    return _variations(at_minus) - _variations(at_plus)


# ---------------------------------------------------------------------------
# Poly interface
# ---------------------------------------------------------------------------


def poly_to_dense(p: Poly) -> tuple[tuple[str, int] | None, list[Fraction]]:
    """Dense coefficients of a univariate (or constant) Poly, with its variable."""
    used = p.variables_used()
    if len(used) > 1:
        raise ValueError(f"polynomial is not univariate: uses {sorted(used)}")
    if not used:
        return None, dtrim([p.constant_value()])
    (kind, idx) = next(iter(used))
    coeffs = [Fraction(0)] * (p.degree_in(kind, idx) + 1)
    for mono, c in p.terms.items():
        e = (mono.x if kind == "x" else mono.u)[idx - 1]
        coeffs[e] += c
    return (kind, idx), dtrim(coeffs)


def dense_to_poly(coeffs: Sequence, n: int, kind: str, idx: int) -> Poly:
    terms = {}
    for e, c in enumerate(coeffs):
        if not c:
            continue
        ex = [0] * n
        ex[idx - 1] = e
        mono = Mono(tuple(ex), (0,) * n) if kind == "x" else Mono((0,) * n, tuple(ex))
        terms[mono] = Fraction(c)
    return Poly(n, terms)


def factor_univariate(p: Poly) -> tuple[Fraction, list[tuple[Poly, int]]]:
    """Factor a univariate Poly over Q into irreducible Poly factors.

    Returns (content, [(factor, multiplicity), ...]); the factors are
    primitive integer polynomials in the same variable and ambient as the
    input, with positive leading coefficients.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    var, coeffs = poly_to_dense(p)
    content, factors = factor_dense(coeffs)
    if var is None:
        return content, []
    kind, idx = var
    return content, [
        (dense_to_poly(fac, p.n, kind, idx), mult) for fac, mult in factors
    ]
