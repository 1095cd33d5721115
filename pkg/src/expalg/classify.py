"""Decomposition drivers for zero sets of exponential polynomials.

``classify_codim1`` handles the general case: it checks the hypotheses
(irreducibility of the defining algebraic set, codimension 1 of the zero
set), builds the candidate hyperplane family from the u-monomial spectrum,
and certifies symbolically which candidates lie inside the zero set.  For
inputs using two or more exponentials the component-language conclusions are
conditional on Schanuel's conjecture and reports say so; single-exponential
and purely algebraic inputs get unconditional statements.

``classify_single_exp`` is the dedicated single-exponential driver: it
additionally computes the exact slice {x1 = 0, u1 = 1} of the defining
polynomial and, when that slice is univariate, splits it into components by
exact factorization.

``irreducibility_oracle`` is a heuristic certifier for polynomial
irreducibility over Q: reducibility witnesses are exact divisors (verified),
irreducibility certificates come from full-degree specializations to random
rational lines whose univariate image is irreducible.  Polynomial
irreducibility over Q is neither necessary nor sufficient for the
irreducibility of the real zero set, so oracle outcomes are recorded in the
hypothesis log rather than treated as proof.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iter_product
from math import gcd

from .epoly import EPoly
from .errors import DriverError, HypothesisViolation
from .factor import (
    count_real_roots,
    dadd,
    dmul,
    factor_dense,
    factor_univariate,
    poly_to_dense,
)
from .hyperplanes import Hyperplane, candidate_hyperplanes
from .intervals import Box
from .numeric import RootCert, isolate_roots_1d, sample_zero_cells_2d
from .poly import Mono, Poly

# Conditionality levels, ordered from strongest statement to weakest.
UNCONDITIONAL = "Unconditional"
CONDITIONAL_SCHANUEL = "ConditionalOnSchanuel"
CONDITIONAL_ASSERTED = "ConditionalOnAssertedHypotheses"
_COND_RANK = {UNCONDITIONAL: 0, CONDITIONAL_SCHANUEL: 1, CONDITIONAL_ASSERTED: 2}

IRREDUCIBLE_SET = "IrreducibleSet"
HYPERPLANE_COMPONENTS = "HyperplaneComponents"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class IrredVerdict:
    """Outcome of the irreducibility oracle."""

    status: str  # Irreducible | Reducible | Unknown
    witness: str = ""
    factor: Poly | None = None  # exact divisor, present for Reducible
    line: tuple[tuple[Fraction, ...], tuple[Fraction, ...]] | None = None


@dataclass(frozen=True)
class HypothesisCheck:
    name: str
    status: str  # verified | supported | asserted | unverified | failed
    detail: str = ""


@dataclass(frozen=True)
class CertifiedHyperplane:
    hyperplane: Hyperplane
    certificate: str


@dataclass(frozen=True)
class RejectedCandidate:
    hyperplane: Hyperplane
    reason: str


@dataclass(frozen=True)
class SliceComponent:
    """One irreducible factor of the exact slice polynomial p(0, x', 1)."""

    factor: Poly
    multiplicity: int
    real_points: bool


@dataclass
class ComponentReport:
    verdict: str
    conditionality: str
    hyperplanes: list[CertifiedHyperplane] = field(default_factory=list)
    rejected: list[RejectedCandidate] = field(default_factory=list)
    residual: str = ""
    hypothesis_log: list[HypothesisCheck] = field(default_factory=list)
    degenerate: bool = False
    notes: list[str] = field(default_factory=list)
    roots: list[RootCert] | None = None
    slice_components: list[SliceComponent] | None = None
    slice_identically_zero: bool | None = None


# ---------------------------------------------------------------------------
# Irreducibility oracle
# ---------------------------------------------------------------------------


def _stable_seed(p: Poly, seed: int) -> int:
    blob = repr(sorted((m.x, m.u, c.numerator, c.denominator) for m, c in p.terms.items()))
    digest = hashlib.sha256(blob.encode()).digest()
    return int.from_bytes(digest[:8], "big") ^ seed


def _poly_nth_root(p: Poly, k: int) -> Poly | None:
    """Exact k-th root if p is a perfect k-th power, else None (verified)."""
    mono, c = p.leading_term()
    if any(e % k for e in mono.x) or any(e % k for e in mono.u):
        return None
    num = _int_nth_root(c.numerator, k)
    den = _int_nth_root(c.denominator, k)
    if num is None or den is None:
        return None
    root_mono = Mono(tuple(e // k for e in mono.x), tuple(e // k for e in mono.u))
    q = Poly(p.n, {root_mono: Fraction(num, den)})
    limit = k * len(p.terms) + 16
    for _ in range(limit):
        r = p - q**k
        if r.is_zero():
            return q
        lead_r, c_r = r.leading_term()
        lead_q, c_q = q.leading_term()
        # Next Newton term: LT(r) / (k LT(q)^(k-1)).
        denom_mono = Mono(tuple(e * (k - 1) for e in lead_q.x), tuple(e * (k - 1) for e in lead_q.u))
        diff_x = tuple(a - b for a, b in zip(lead_r.x, denom_mono.x))
        diff_u = tuple(a - b for a, b in zip(lead_r.u, denom_mono.u))
        if any(e < 0 for e in diff_x) or any(e < 0 for e in diff_u):
            return None
        coeff = c_r / (k * c_q ** (k - 1))
        q = q + Poly(p.n, {Mono(diff_x, diff_u): coeff})
    return None


def _int_nth_root(v: int, k: int) -> int | None:
    if v < 0:
        if k % 2 == 0:
            return None
        r = _int_nth_root(-v, k)
        return None if r is None else -r
    if v in (0, 1):
        return v
    lo, hi = 1, 1 << ((v.bit_length() + k - 1) // k + 1)
    while lo < hi:
        mid = (lo + hi) // 2
        if mid**k < v:
            lo = mid + 1
        else:
            hi = mid
    return lo if lo**k == v else None


def _trial_divide(p: Poly, d: Poly) -> Poly | None:
    """Exact quotient p / d under graded-lex leading-term division, or None."""
    quo = Poly.zero(p.n)
    rem = p
    lead_d, c_d = d.leading_term()
    guard = len(p.terms) * (len(d.terms) + 1) + 16
    for _ in range(guard):
        if rem.is_zero():
            return quo
        lead_r, c_r = rem.leading_term()
        diff_x = tuple(a - b for a, b in zip(lead_r.x, lead_d.x))
        diff_u = tuple(a - b for a, b in zip(lead_r.u, lead_d.u))
        if any(e < 0 for e in diff_x) or any(e < 0 for e in diff_u):
            return None
        t = Poly(p.n, {Mono(diff_x, diff_u): c_r / c_d})
        quo = quo + t
        rem = rem - t * d
    return None


def _linear_candidates(p: Poly, height: int = 2, max_active: int = 5):
    """Primitive affine forms in the active variables, small coefficients."""
    active = sorted(p.variables_used())
    if not active or len(active) > max_active:
        return
    span = range(-height, height + 1)
    n = p.n
    for consts in iter_product(span, repeat=len(active) + 1):
        coeffs, const = consts[:-1], consts[-1]
        if all(c == 0 for c in coeffs):
            continue
        first = next(c for c in coeffs if c)
        if first < 0:
            continue  # sign-canonical representative
        g = 0
        for c in coeffs + (const,):
            g = gcd(g, abs(c))
        if g != 1:
            continue
        terms = {}
        if const:
            terms[Mono((0,) * n, (0,) * n)] = Fraction(const)
        for (kind, idx), c in zip(active, coeffs):
            if not c:
                continue
            e = [0] * n
            e[idx - 1] = 1
            mono = Mono(tuple(e), (0,) * n) if kind == "x" else Mono((0,) * n, tuple(e))
            terms[mono] = Fraction(c)
        yield Poly(n, terms)


def _specialize_to_line(p: Poly, a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Dense univariate image of p under every variable -> a_i t + b_i."""
    acc: list[Fraction] = []
    for mono, c in p.terms.items():
        term = [Fraction(c)]
        for i, e in enumerate(list(mono.x) + list(mono.u)):
            if e:
                lin = [b[i], a[i]] if a[i] else [b[i]]
                for _ in range(e):
                    term = dmul(term, lin)
        acc = dadd(acc, term)
    return acc


def irreducibility_oracle(p: Poly, attempts: int = 8, seed: int = 0) -> IrredVerdict:
    """Heuristic irreducibility certifier for polynomials over Q.

    Reducible verdicts always carry an exact divisor.  Irreducible verdicts
    record the certifying random line: the specialization preserves the total
    degree and its univariate image is irreducible over Q, so any nontrivial
    factorization of p would specialize to one of the image.  After the
    configured number of lines without a certificate the verdict is Unknown.
    """
    if p.is_zero() or p.is_constant():
        raise HypothesisViolation("irreducibility is undefined for constants")
    deg = p.total_degree()
    if deg == 1:
        return IrredVerdict("Irreducible", witness="linear polynomial")

    content = p.monomial_content()
    if content.degree > 0:
        if len(p.terms) == 1:
            # A single monomial of degree >= 2 splits off any one variable.
            kind, idx = sorted(p.variables_used())[0]
            var = Poly.x_var(p.n, idx) if kind == "x" else Poly.u_var(p.n, idx)
            return IrredVerdict("Reducible", witness="monomial of degree >= 2", factor=var)
        for j, e in enumerate(content.x):
            if e:
                return IrredVerdict(
                    "Reducible",
                    witness=f"common factor x{j + 1}",
                    factor=Poly.x_var(p.n, j + 1),
                )
        for j, e in enumerate(content.u):
            if e:
                return IrredVerdict(
                    "Reducible",
                    witness=f"common factor u{j + 1}",
                    factor=Poly.u_var(p.n, j + 1),
                )

    for k in (2, 3, 5, 7):
        if deg % k == 0 and deg >= k:
            root = _poly_nth_root(p, k)
            if root is not None:
                return IrredVerdict(
                    "Reducible", witness=f"perfect {k}-th power", factor=root
                )

    rng = random.Random(_stable_seed(p, seed))
    for _ in range(max(1, attempts)):
        a = [Fraction(rng.randint(-20, 20), rng.randint(1, 20)) for _ in range(2 * p.n)]
        b = [Fraction(rng.randint(-20, 20), rng.randint(1, 20)) for _ in range(2 * p.n)]
        if all(v == 0 for v in a):
            continue
        image = _specialize_to_line(p, a, b)
        if len(image) - 1 != deg:
            continue  # degenerate direction; draw again
        _, factors = factor_dense(image)
        nontrivial = [(g, m) for g, m in factors if len(g) > 1]
        if len(nontrivial) == 1 and nontrivial[0][1] == 1 and len(nontrivial[0][0]) - 1 == deg:
            return IrredVerdict(
                "Irreducible",
                witness="full-degree line specialization with irreducible image",
                line=(tuple(a), tuple(b)),
            )

    # Every sampled image factored: hunt for an exact low-degree divisor.
    for cand in _linear_candidates(p):
        if cand.total_degree() < 1:
            continue
        quo = _trial_divide(p, cand)
        if quo is not None and not quo.is_constant():
            return IrredVerdict(
                "Reducible", witness="exact division by a small linear form", factor=cand
            )
    return IrredVerdict("Unknown", witness="no certificate within the attempt budget")


# ---------------------------------------------------------------------------
# Shared hypothesis checks
# ---------------------------------------------------------------------------


def _log_irreducibility(p, assume, attempts, seed, log) -> None:
    if assume:
        log.append(
            HypothesisCheck(
                "Z(p) irreducible",
                "asserted",
                "accepted via flag; user responsibility",
            )
        )
        return
    verdict = irreducibility_oracle(p, attempts=attempts, seed=seed)
    if verdict.status == "Irreducible":
        log.append(
            HypothesisCheck(
                "Z(p) irreducible",
                "verified",
                "polynomial is irreducible over Q ({}); note this is a proxy for "
                "irreducibility of the real zero set".format(verdict.witness),
            )
        )
    elif verdict.status == "Reducible":
        log.append(
            HypothesisCheck(
                "Z(p) irreducible",
                "failed",
                f"polynomial factors: {verdict.witness}",
            )
        )
    else:
        log.append(
            HypothesisCheck("Z(p) irreducible", "unverified", verdict.witness)
        )


def _log_codim1(p, f: EPoly, assume, log) -> list[RootCert] | None:
    """Check/record the hypothesis dim Z(f) = n-1. Returns roots when n = 1."""
    n = f.n
    if assume:
        log.append(
            HypothesisCheck(
                "dim Z(f) = n-1", "asserted", "accepted via flag; user responsibility"
            )
        )
        return None
    if n == 1:
        certs, leftovers = isolate_roots_1d(f)
        if certs or leftovers:
            log.append(
                HypothesisCheck(
                    "dim Z(f) = n-1",
                    "verified",
                    f"{len(certs)} certified roots on the default search domain",
                )
            )
        else:
            log.append(
                HypothesisCheck(
                    "dim Z(f) = n-1",
                    "failed",
                    "no roots found on the default search domain; the zero set "
                    "appears empty",
                )
            )
        return certs
    if n == 2:
        depth = 6
        cells = sample_zero_cells_2d(
            f, Box.from_bounds([(-2.0, 2.0), (-2.0, 2.0)]), depth
        )
        if len(cells) >= 2**depth:
            log.append(
                HypothesisCheck(
                    "dim Z(f) = n-1",
                    "supported",
                    f"{len(cells)} retained cells at depth {depth} on [-2,2]^2 "
                    "(curve-like count); heuristic, not a proof",
                )
            )
        elif cells:
            log.append(
                HypothesisCheck(
                    "dim Z(f) = n-1",
                    "unverified",
                    f"only {len(cells)} retained cells at depth {depth}; the zero "
                    "set may have dimension below n-1",
                )
            )
        else:
            log.append(
                HypothesisCheck(
                    "dim Z(f) = n-1",
                    "unverified",
                    "no retained cells on [-2,2]^2; the zero set may be empty",
                )
            )
        return None
    log.append(
        HypothesisCheck(
            "dim Z(f) = n-1",
            "unverified",
            "no dimension check available for n >= 3; use the assertion flag",
        )
    )
    return None


_COND_NAMES = [UNCONDITIONAL, CONDITIONAL_SCHANUEL, CONDITIONAL_ASSERTED]


def _conditionality(base: str, log) -> str:
    level = _COND_RANK[base]
    if any(h.status in ("asserted", "unverified", "failed") for h in log):
        level = max(level, _COND_RANK[CONDITIONAL_ASSERTED])
    return _COND_NAMES[level]


# ---------------------------------------------------------------------------
# codim-1 classification
# ---------------------------------------------------------------------------


def classify_codim1(
    p: Poly,
    assume_irreducible: bool = False,
    assume_codim1: bool = False,
    attempts: int = 8,
    seed: int = 0,
) -> ComponentReport:
    """Classify the codimension-1 components of Z(p(x, e^x)).

    Certified hyperplanes are exact symbolic facts (the restriction of the
    function to the hyperplane is the zero exponential polynomial).  The
    completeness claim, that any further codimension-1 component would be one
    of the candidates, is conditional on Schanuel's conjecture for inputs
    with two or more exponentials; single-exponential and purely algebraic
    inputs are unconditional.
    """
    if p.is_zero():
        raise HypothesisViolation("cannot classify the zero polynomial")
    n = p.n
    log: list[HypothesisCheck] = []
    notes: list[str] = []

    f = EPoly.from_poly(p)
    if f.is_zero():
        # Unreachable for nonzero p (the canonical form is faithful); kept
        # as a defensive branch.
        return ComponentReport(
            verdict=INCONCLUSIVE,
            conditionality=UNCONDITIONAL,
            residual="the function vanishes identically; the zero set is all of R^n",
            hypothesis_log=log,
        )

    cand = candidate_hyperplanes(p)
    if cand.degenerate:
        # The zero set is algebraic in x (up to a nonvanishing exponential
        # factor); only the x-part hypotheses matter here.
        roots = _log_codim1(p, f, assume_codim1, log)
        return _classify_degenerate(p, log, notes, attempts, seed, roots)

    _log_irreducibility(p, assume_irreducible, attempts, seed, log)
    roots = _log_codim1(p, f, assume_codim1, log)

    certified: list[CertifiedHyperplane] = []
    rejected: list[RejectedCandidate] = []
    for m in cand:
        if f.restrict(m).is_zero():
            certified.append(
                CertifiedHyperplane(
                    m, "restriction to the hyperplane is the zero exponential polynomial"
                )
            )
        else:
            rejected.append(
                RejectedCandidate(m, "restriction does not vanish identically")
            )

    u_used = sorted(i for kind, i in p.variables_used() if kind == "u")
    single_exp = len(u_used) <= 1

    if n == 1:
        # One variable: the zero set is a finite set of points; the candidate
        # {x1 = 0} can lie inside it without being a component, so component
        # claims come from the unconditional single-exponential theory.
        if certified:
            notes.append(
                "the origin lies in the zero set (restriction to x1 = 0 vanishes); "
                "a point is reported through the root certificates, not as a "
                "component"
            )
        oracle_ok = any(
            h.name == "Z(p) irreducible" and h.status in ("verified", "asserted")
            for h in log
        )
        if oracle_ok and roots is not None and roots:
            verdict = IRREDUCIBLE_SET
            residual = (
                "the zero set is the finite set of certified roots; splitting off "
                "any single transcendental point would need a defining equation "
                "over Q, which Lindemann-type independence rules out"
            )
        else:
            verdict = INCONCLUSIVE
            residual = "hypotheses not established for the one-variable argument"
        return ComponentReport(
            verdict=verdict,
            conditionality=_conditionality(UNCONDITIONAL, log),
            hyperplanes=[],
            rejected=rejected,
            residual=residual,
            hypothesis_log=log,
            notes=notes,
            roots=roots,
        )

    if certified:
        verdict = HYPERPLANE_COMPONENTS
        residual = (
            "closure of Z(f) minus the listed hyperplanes; any further "
            "codimension-1 component would be a certified candidate, and all "
            "remaining candidates fail the vanishing certificate"
        )
    else:
        verdict = IRREDUCIBLE_SET
        residual = (
            "no candidate hyperplane lies in Z(f); under the logged hypotheses "
            "the zero set has no codimension-1 decomposition"
        )
    if single_exp:
        base = UNCONDITIONAL
        notes.append(
            "single-exponential input: the classification is unconditional"
        )
    else:
        base = CONDITIONAL_SCHANUEL
        notes.append(
            "multi-exponential input: completeness of the component list is "
            "conditional on Schanuel's conjecture"
        )
    if verdict == HYPERPLANE_COMPONENTS and single_exp:
        notes.append(
            "components below codimension 1 may remain; they are not computed "
            "symbolically"
        )
    return ComponentReport(
        verdict=verdict,
        conditionality=_conditionality(base, log),
        hyperplanes=certified,
        rejected=rejected,
        residual=residual,
        hypothesis_log=log,
        notes=notes,
        roots=roots,
    )


def _classify_degenerate(
    p: Poly,
    log: list[HypothesisCheck],
    notes: list[str],
    attempts: int,
    seed: int,
    roots,
) -> ComponentReport:
    """At most one u-exponent vector: the zero set is algebraic in x."""
    d = next(iter(p.u_exponent_vectors()))
    x_part = Poly(
        p.n, {Mono(m.x, (0,) * p.n): c for m, c in p.terms.items()}
    )
    if any(d):
        notes.append(
            "single exponential monomial factor e^(d.x) never vanishes; the "
            "zero set equals the real zero set of the x-coefficient polynomial"
        )
    else:
        notes.append("no exponential dependence: the zero set is algebraic in x")

    if x_part.is_constant():
        verdict = INCONCLUSIVE
        residual = "the x-part is a nonzero constant; the zero set is empty"
        base = UNCONDITIONAL
    else:
        oracle = irreducibility_oracle(x_part, attempts=attempts, seed=seed)
        if oracle.status == "Irreducible":
            verdict = IRREDUCIBLE_SET
            residual = (
                "the zero set equals an irreducible algebraic set (irreducible "
                "algebraic hypersurfaces stay irreducible in the exponential "
                "topology)"
            )
            log.append(
                HypothesisCheck(
                    "x-part irreducible", "verified", oracle.witness
                )
            )
            base = UNCONDITIONAL
        elif oracle.status == "Reducible":
            verdict = INCONCLUSIVE
            residual = (
                "the x-part factors; decomposing general algebraic sets is out "
                "of scope"
            )
            log.append(HypothesisCheck("x-part irreducible", "failed", oracle.witness))
            base = UNCONDITIONAL
        else:
            verdict = INCONCLUSIVE
            residual = "irreducibility of the x-part could not be decided"
            log.append(
                HypothesisCheck("x-part irreducible", "unverified", oracle.witness)
            )
            base = UNCONDITIONAL
    return ComponentReport(
        verdict=verdict,
        conditionality=_conditionality(base, log),
        hyperplanes=[],
        rejected=[],
        residual=residual,
        hypothesis_log=log,
        degenerate=True,
        notes=notes,
        roots=roots,
    )


# ---------------------------------------------------------------------------
# Single-exponential driver
# ---------------------------------------------------------------------------


def classify_single_exp(
    p: Poly,
    attempts: int = 8,
    seed: int = 0,
) -> ComponentReport:
    """Unconditional analysis for polynomials depending on u1 only.

    Components of the zero set either sit inside the hyperplane {x1 = 0} or
    arise as projections of components of the lifted variety Z(p)
    intersected with the graph {u1 = e^{x1}}.  The exact slice
    p(0, x2..xn, 1) detects the {x1 = 0, u1 = 1} part: if it vanishes
    identically the whole slice lies in the intersection; if it is univariate
    it is split into components by exact factorization.
    """
    if p.is_zero():
        raise HypothesisViolation("cannot classify the zero polynomial")
    bad = sorted(i for kind, i in p.variables_used() if kind == "u" and i >= 2)
    if bad:
        raise DriverError(
            f"single-exponential driver requires dependence on u1 only; "
            f"found u{bad[0]}"
        )
    n = p.n
    log: list[HypothesisCheck] = []
    notes: list[str] = [
        "the lifted variety Z(p) itself serves as the algebraic cover of the "
        "zero set; the dimension bound dim Z(p) <= dim Z(f) + 1 is recorded, "
        "not computed"
    ]
    log.append(
        HypothesisCheck(
            "dim Z(p) <= dim Z(f) + 1",
            "asserted",
            "structural assumption of the single-exponential analysis",
        )
    )

    f = EPoly.from_poly(p)
    if not p.is_constant():
        _log_irreducibility(p, False, attempts, seed, log)
    roots = _log_codim1(p, f, False, log)

    # Exact slice p(0, x', 1).
    sliced = p.substitute_value("x", 1, 0).substitute_value("u", 1, 1)
    slice_zero = sliced.is_zero()

    certified: list[CertifiedHyperplane] = []
    rejected: list[RejectedCandidate] = []
    slice_components: list[SliceComponent] | None = None

    if n >= 2:
        axis = Hyperplane((1,) + (0,) * (n - 1))
        if f.restrict(axis).is_zero():
            certified.append(
                CertifiedHyperplane(
                    axis,
                    "restriction to the hyperplane is the zero exponential polynomial",
                )
            )
        else:
            rejected.append(
                RejectedCandidate(axis, "restriction does not vanish identically")
            )

    if slice_zero:
        notes.append(
            "the slice polynomial p(0, x', 1) vanishes identically: the whole "
            "set {x1 = 0, u1 = 1} lies in the lifted intersection"
        )
    elif sliced.is_constant():
        notes.append(
            "the slice polynomial p(0, x', 1) is a nonzero constant: the "
            "{x1 = 0, u1 = 1} slice contributes no points"
        )
    else:
        used = sliced.variables_used()
        if len(used) == 1:
            _, factors = factor_univariate(sliced)
            slice_components = [
                SliceComponent(fac, mult, _has_real_root(fac))
                for fac, mult in factors
            ]
            real = [sc for sc in slice_components if sc.real_points]
            notes.append(
                f"the slice factors exactly into {len(factors)} irreducible "
                f"parts, {len(real)} with real points; each real part is one "
                "component of the slice"
            )
        else:
            notes.append(
                "the slice polynomial has 2 or more variables; slice "
                "decomposition beyond the univariate case is not attempted"
            )

    notes.append(
        "any further components are projections of components of "
        "Z(p) n {u1 = e^(x1)} with x1 != 0; upper bounds on their number grow "
        "like (c d)^n in the total degree d, with an unspecified absolute "
        "constant c"
    )

    if n == 1:
        oracle_ok = any(
            h.name == "Z(p) irreducible" and h.status == "verified" for h in log
        )
        if oracle_ok and roots:
            verdict = IRREDUCIBLE_SET
            residual = "the zero set is the finite set of certified roots"
        else:
            verdict = INCONCLUSIVE
            residual = "see the root certificates and the hypothesis log"
        conditionality = (
            UNCONDITIONAL
            if oracle_ok
            else CONDITIONAL_ASSERTED
        )
        return ComponentReport(
            verdict=verdict,
            conditionality=conditionality,
            hyperplanes=[],
            rejected=rejected,
            residual=residual,
            hypothesis_log=log,
            notes=notes,
            roots=roots,
        )

    if certified:
        verdict = HYPERPLANE_COMPONENTS
        residual = (
            "closure of Z(f) minus the hyperplane x1 = 0; remaining components "
            "have dimension below n-1 and come from the graph intersection"
        )
    elif slice_components is not None and any(sc.real_points for sc in slice_components):
        verdict = INCONCLUSIVE
        residual = (
            "no codimension-1 hyperplane component; the zero set decomposes "
            "through the listed slice components (below codimension 1)"
        )
    else:
        verdict = IRREDUCIBLE_SET
        residual = (
            "no hyperplane component and no slice contribution; under the "
            "logged hypotheses the zero set does not decompose in "
            "codimension 1"
        )

    # The hyperplane certificate and the slice factorization are exact
    # symbolic facts; only completeness-style claims depend on the logged
    # hypotheses, and those are structural rather than conjectural here.
    conditionality = UNCONDITIONAL
    if verdict == IRREDUCIBLE_SET and any(
        h.status in ("asserted", "unverified", "failed")
        for h in log
        if h.name == "Z(p) irreducible"
    ):
        conditionality = CONDITIONAL_ASSERTED

    return ComponentReport(
        verdict=verdict,
        conditionality=conditionality,
        hyperplanes=certified,
        rejected=rejected,
        residual=residual,
        hypothesis_log=log,
        notes=notes,
        roots=roots,
        slice_components=slice_components,
        slice_identically_zero=slice_zero,
    )


def _has_real_root(fac: Poly) -> bool:
    _, coeffs = poly_to_dense(fac)
    return count_real_roots(coeffs) > 0
