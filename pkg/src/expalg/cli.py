"""Command-line interface: JSON reports on stdout, human summaries on stderr.

Exit codes: 0 success, 1 input/parse error, 2 hypothesis violation
(precondition of the requested analysis fails on this input), 3 internal
invariant breach (never expected).

Reports are versioned (schemaVersion 1) and byte-identical for identical
(input, seed, mode); wall-clock timings are only included when --timings is
given, since they would break reproducibility.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import corpus
from .classify import ComponentReport, classify_codim1, classify_single_exp
from .epoly import EPoly
from .errors import (
    DimensionError,
    DriverError,
    ExpalgError,
    HyperplaneError,
    HypothesisViolation,
    InternalInvariantError,
    ParseError,
)
from .hyperplanes import candidate_hyperplanes
from .intervals import Box, Interval
from .numeric import (
    RootCert,
    check_transversality,
    default_root_domain,
    isolate_roots_1d,
    sample_zero_cells_2d,
)
from .parsing import (
    format_epoly,
    format_hyperplane,
    format_poly,
    parse_epoly,
    parse_poly,
)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_HYPOTHESIS = 2
EXIT_INTERNAL = 3


# ---------------------------------------------------------------------------
# JSON payload helpers
# ---------------------------------------------------------------------------


def _interval_json(iv: Interval) -> list[float]:
    return [iv.lo, iv.hi]


def _root_json(cert: RootCert) -> dict:
    return {
        "enclosure": _interval_json(cert.enclosure),
        "kind": cert.kind,
        "residualBound": cert.residual_bound,
    }


def _hyperplane_json(h) -> dict:
    return {"normal": list(h.normal), "equation": format_hyperplane(h)}


def _report_json(rep: ComponentReport) -> dict:
    payload = {
        "verdict": rep.verdict,
        "conditionality": rep.conditionality,
        "hyperplanes": [
            {**_hyperplane_json(c.hyperplane), "certificate": c.certificate}
            for c in rep.hyperplanes
        ],
        "rejected": [
            {**_hyperplane_json(c.hyperplane), "reason": c.reason}
            for c in rep.rejected
        ],
        "residual": rep.residual,
        "degenerate": rep.degenerate,
        "notes": rep.notes,
    }
    if rep.roots is not None:
        payload["roots"] = [_root_json(r) for r in rep.roots]
    if rep.slice_components is not None:
        payload["sliceComponents"] = [
            {
                "factor": format_poly(sc.factor),
                "multiplicity": sc.multiplicity,
                "realPoints": sc.real_points,
            }
            for sc in rep.slice_components
        ]
    if rep.slice_identically_zero is not None:
        payload["sliceIdenticallyZero"] = rep.slice_identically_zero
    return payload


def _hypothesis_json(rep: ComponentReport) -> list[dict]:
    return [
        {"hypothesis": h.name, "status": h.status, "detail": h.detail}
        for h in rep.hypothesis_log
    ]


def _emit(args, command: str, input_text, result, hypothesis_log=None, elapsed=None) -> None:
    report = {
        "schemaVersion": SCHEMA_VERSION,
        "command": command,
        "input": input_text,
        "mode": "rigorous" if getattr(args, "rigorous", False) else "fast",
        "seed": getattr(args, "seed", 0),
        "result": result,
        "hypothesisLog": hypothesis_log or [],
        "timings": (
            {"totalMs": round(elapsed * 1000.0, 3)}
            if getattr(args, "timings", False) and elapsed is not None
            else None
        ),
    }
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    sys.stdout.write(text)
    if getattr(args, "output", None):
        with open(args.output, "w") as handle:
            handle.write(text)


def _say(message: str) -> None:
    print(message, file=sys.stderr)


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_canon(args) -> int:
    start = time.perf_counter()
    as_epoly = args.epoly or "exp" in args.text
    if as_epoly:
        value = parse_epoly(args.text, args.ambient)
        canonical = format_epoly(value)
        kind = "epoly"
    else:
        value = parse_poly(args.text, args.ambient)
        canonical = format_poly(value)
        kind = "poly"
    _say(f"canonical {kind}: {canonical}")
    _emit(
        args,
        "canon",
        args.text,
        {"kind": kind, "canonical": canonical},
        elapsed=time.perf_counter() - start,
    )
    return EXIT_OK


def _cmd_hyperplanes(args) -> int:
    start = time.perf_counter()
    p = parse_poly(args.text, args.ambient)
    cand = candidate_hyperplanes(p)
    result = {
        "degenerate": cand.degenerate,
        "count": len(cand),
        "hyperplanes": [_hyperplane_json(h) for h in cand],
    }
    if cand.degenerate:
        _say("candidate family undefined: at most one u-monomial")
    else:
        _say("candidates: " + ", ".join(format_hyperplane(h) for h in cand))
    _emit(args, "hyperplanes", format_poly(p), result, elapsed=time.perf_counter() - start)
    return EXIT_OK


def _cmd_classify(args) -> int:
    start = time.perf_counter()
    p = parse_poly(args.text, args.ambient)
    rep = classify_codim1(
        p,
        assume_irreducible=args.assert_irreducible,
        assume_codim1=args.assert_codim1,
        attempts=args.attempts,
        seed=args.seed,
    )
    _say(f"verdict: {rep.verdict} ({rep.conditionality})")
    for c in rep.hyperplanes:
        _say(f"  component: {format_hyperplane(c.hyperplane)}")
    for c in rep.rejected:
        _say(f"  rejected:  {format_hyperplane(c.hyperplane)}")
    _emit(
        args,
        "classify",
        format_poly(p),
        _report_json(rep),
        hypothesis_log=_hypothesis_json(rep),
        elapsed=time.perf_counter() - start,
    )
    return EXIT_OK


def _cmd_classify1e(args) -> int:
    start = time.perf_counter()
    p = parse_poly(args.text, args.ambient)
    rep = classify_single_exp(p, attempts=args.attempts, seed=args.seed)
    _say(f"verdict: {rep.verdict} ({rep.conditionality})")
    for sc in rep.slice_components or []:
        tag = "component" if sc.real_points else "no real points"
        _say(f"  slice factor {format_poly(sc.factor)}^{sc.multiplicity}: {tag}")
    _emit(
        args,
        "classify1e",
        format_poly(p),
        _report_json(rep),
        hypothesis_log=_hypothesis_json(rep),
        elapsed=time.perf_counter() - start,
    )
    return EXIT_OK


def _cmd_roots(args) -> int:
    start = time.perf_counter()
    f = parse_epoly(args.text, args.ambient)
    if f.n != 1:
        raise DriverError("roots requires a 1-variable exponential polynomial")
    domain = tuple(args.domain) if args.domain else default_root_domain(f)
    certs, leftovers = isolate_roots_1d(f, domain, args.tol)
    _say(
        f"{len(certs)} certified roots on [{domain[0]}, {domain[1]}]"
        + (f", {len(leftovers)} uncertified intervals" if leftovers else "")
    )
    for cert in certs:
        _say(f"  {cert.kind}: [{cert.enclosure.lo!r}, {cert.enclosure.hi!r}]")
    result = {
        "domain": [float(domain[0]), float(domain[1])],
        "tolerance": args.tol,
        "count": len(certs),
        "certified": [_root_json(c) for c in certs],
        "uncertified": [_root_json(c) for c in leftovers],
    }
    _emit(args, "roots", format_epoly(f), result, elapsed=time.perf_counter() - start)
    return EXIT_OK


def _cmd_sample2d(args) -> int:
    start = time.perf_counter()
    f = parse_epoly(args.text, args.ambient)
    if f.n != 2:
        raise DriverError("sample2d requires a 2-variable exponential polynomial")
    bounds = args.box if args.box else [-2.0, 2.0, -2.0, 2.0]
    box = Box.from_bounds([(bounds[0], bounds[1]), (bounds[2], bounds[3])])
    mode = "rigorous" if args.rigorous else "fast"
    cells = sample_zero_cells_2d(f, box, args.depth, mode)
    _say(f"{len(cells)} cells retained at depth {args.depth}")
    result = {
        "box": [list(b) for b in box.bounds()],
        "depth": args.depth,
        "cellWidth": [
            (box.intervals[0].width) / 2**args.depth,
            (box.intervals[1].width) / 2**args.depth,
        ],
        "count": len(cells),
        "cells": [
            [c.intervals[0].lo, c.intervals[0].hi, c.intervals[1].lo, c.intervals[1].hi]
            for c in cells
        ],
    }
    _emit(args, "sample2d", format_epoly(f), result, elapsed=time.perf_counter() - start)
    return EXIT_OK


def _cmd_transversal(args) -> int:
    start = time.perf_counter()
    p = parse_poly(args.text, args.ambient)
    n = p.n
    coords = [Fraction(c) for c in (args.coords or [])]
    if len(coords) != n - 1:
        raise DriverError(
            f"transversal on an ambient-{n} polynomial needs {n - 1} --coords values"
        )
    if args.root_of:
        f_root = parse_epoly(args.root_of)
    else:
        if n != 1:
            raise DriverError("--root-of is required when the polynomial has n >= 2")
        f_root = EPoly.from_poly(p)
    if f_root.n != 1:
        raise DriverError("--root-of must be a 1-variable exponential polynomial")
    domain = tuple(args.domain) if args.domain else default_root_domain(f_root)
    certs, _ = isolate_roots_1d(f_root, domain, args.root_tol)
    if not certs:
        raise HypothesisViolation("no certified roots to lift")
    if args.root_index is not None:
        if not 0 <= args.root_index < len(certs):
            raise DriverError(
                f"--root-index out of range 0..{len(certs) - 1}"
            )
        selected = [certs[args.root_index]]
    else:
        selected = [c for c in certs if not c.enclosure.contains(0.0)]
        if not selected:
            raise HypothesisViolation(
                "every certified root enclosure contains x1 = 0; select one "
                "explicitly with --root-index to see the violation"
            )
    reports = []
    for cert in selected:
        rep = check_transversality(p, cert, coords, args.tol)
        reports.append((cert, rep))
        _say(
            f"at x1 in [{cert.enclosure.lo!r}, {cert.enclosure.hi!r}]: "
            f"{rep.verdict}, margin {rep.tangency_margin:.6g}"
        )
    result = {
        "tolerance": args.tol,
        "checks": [
            {
                "rootEnclosure": _interval_json(cert.enclosure),
                "point": list(rep.point),
                "jacobianRankLowerBound": rep.jacobian_rank_lower_bound,
                "tangencyMargin": rep.tangency_margin,
                "verdict": rep.verdict,
            }
            for cert, rep in reports
        ],
    }
    _emit(args, "transversal", format_poly(p), result, elapsed=time.perf_counter() - start)
    return EXIT_OK


def _cmd_verify_paper(args) -> int:
    start = time.perf_counter()
    checks = corpus.run_all()
    failed = [c for c in checks if not c.passed]
    for c in checks:
        _say(f"{'PASS' if c.passed else 'FAIL'}  {c.name}" + (f"  ({c.detail})" if c.detail else ""))
    _say(f"{len(checks) - len(failed)}/{len(checks)} corpus checks passed")
    result = {
        "total": len(checks),
        "passed": len(checks) - len(failed),
        "failed": len(failed),
        "checks": [
            {"name": c.name, "passed": c.passed, "detail": c.detail} for c in checks
        ],
    }
    _emit(args, "verify-paper", None, result, elapsed=time.perf_counter() - start)
    return EXIT_OK if not failed else EXIT_INTERNAL


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--seed", type=int, default=0, help="seed for randomized steps")
    sub.add_argument("--rigorous", action="store_true", help="rational interval backend")
    sub.add_argument("--ambient", type=int, default=None, help="override variable count")
    sub.add_argument("--output", default=None, help="also write the JSON report to a file")
    sub.add_argument("--timings", action="store_true", help="include wall-clock timings")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="expalg",
        description="Analyze real zero sets of exponential polynomials",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    canon = subs.add_parser("canon", help="parse and print the canonical form")
    canon.add_argument("text")
    canon.add_argument("--epoly", action="store_true", help="force the exponential grammar")
    _add_common(canon)
    canon.set_defaults(func=_cmd_canon)

    hyper = subs.add_parser("hyperplanes", help="candidate hyperplane family")
    hyper.add_argument("text")
    _add_common(hyper)
    hyper.set_defaults(func=_cmd_hyperplanes)

    classify = subs.add_parser("classify", help="codimension-1 component classification")
    classify.add_argument("text")
    classify.add_argument("--assert-irreducible", action="store_true")
    classify.add_argument("--assert-codim1", action="store_true")
    classify.add_argument("--attempts", type=int, default=8)
    _add_common(classify)
    classify.set_defaults(func=_cmd_classify)

    single = subs.add_parser("classify1e", help="single-exponential classification")
    single.add_argument("text")
    single.add_argument("--attempts", type=int, default=8)
    _add_common(single)
    single.set_defaults(func=_cmd_classify1e)

    roots = subs.add_parser("roots", help="certified 1-D root isolation")
    roots.add_argument("text")
    roots.add_argument("--domain", type=float, nargs=2, default=None)
    roots.add_argument("--tol", type=float, default=1e-9)
    _add_common(roots)
    roots.set_defaults(func=_cmd_roots)

    sample = subs.add_parser("sample2d", help="quadtree zero-cell sampling")
    sample.add_argument("text")
    sample.add_argument("--box", type=float, nargs=4, default=None, metavar=("X0", "X1", "Y0", "Y1"))
    sample.add_argument("--depth", type=int, default=8)
    _add_common(sample)
    sample.set_defaults(func=_cmd_sample2d)

    trans = subs.add_parser("transversal", help="graph transversality at lifted roots")
    trans.add_argument("text")
    trans.add_argument("--root-of", default=None, help="1-variable epoly whose root lifts")
    trans.add_argument("--coords", nargs="*", default=None, help="values of x2..xn")
    trans.add_argument("--root-index", type=int, default=None)
    trans.add_argument("--tol", type=float, default=1e-6)
    trans.add_argument("--root-tol", type=float, default=1e-9)
    trans.add_argument("--domain", type=float, nargs=2, default=None)
    _add_common(trans)
    trans.set_defaults(func=_cmd_transversal)

    verify = subs.add_parser(
        "verify-paper", help="run the embedded example corpus against expected outcomes"
    )
    _add_common(verify)
    verify.set_defaults(func=_cmd_verify_paper)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        _say(f"input error: {exc}")
        return EXIT_INPUT
    except (HypothesisViolation, DriverError) as exc:
        _say(f"hypothesis violation: {exc}")
        return EXIT_HYPOTHESIS
    except (DimensionError, HyperplaneError, ValueError) as exc:
        _say(f"input error: {exc}")
        return EXIT_INPUT
    except InternalInvariantError as exc:  # pragma: no cover - never expected
        _say(f"internal invariant breach: {exc}")
        return EXIT_INTERNAL
    except ExpalgError as exc:  # pragma: no cover - residual guard
        _say(f"error: {exc}")
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
