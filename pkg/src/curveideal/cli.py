"""Command-line front end.

Three subcommands cover the pipeline: `sample` turns a parametrization
file into a points file, `ideal` runs the border basis construction on a
points file (optionally minimizing, rationalizing, and verifying), and
`bounds` answers degree-bound and point-count questions for a declared
curve profile.

Exit codes: 0 success, 1 input error, 2 numerical-confidence failure (a
failed verification, or any recorded warning under --strict).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import warnings
from fractions import Fraction

from .bounds import (
    PROFILE_CLASSES,
    CurveProfile,
    ProfileError,
    class_divisor_degree,
    degree_bound,
    predicted_complement_size,
    required_points,
)
from .engine import border_basis_approx, border_basis_with_complement, points_oracle
from .formats import (
    InputFormatError,
    generators_document,
    points_document,
    read_parametrization,
    read_points,
    write_generators,
    write_points,
)
from .minimize import minimal_basis, minimal_basis_approx, minimal_basis_border
from .points import PointSet
from .recovery import (
    RationalizationPolicy,
    rationalize_generators,
    verify_by_substitution,
    verify_on_points,
)
from .sampling import sample_exact_rational, sample_roots_of_unity


class _InputError(Exception):
    """A user-input problem; maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _InputError(message)


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="curveideal",
        description="Generators of the vanishing ideal of a projective curve "
        "from sampled points.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sample = sub.add_parser(
        "sample", help="sample points from a parametrization file"
    )
    sample.add_argument("--parametrization", required=True, metavar="FILE")
    sample.add_argument(
        "--count", type=int, metavar="H",
        help="roots-of-unity sample count (default: the required point count "
        "m*d+1 for the parametrization's degree bound)",
    )
    sample.add_argument(
        "--t-values", metavar="LIST",
        help="comma-separated rational t values; switches to exact sampling",
    )
    _output_flags(sample)

    ideal = sub.add_parser("ideal", help="compute ideal generators from points")
    ideal.add_argument("--points", required=True, metavar="FILE")
    src = ideal.add_mutually_exclusive_group(required=True)
    src.add_argument("--degree-bound", type=int, metavar="N")
    src.add_argument("--profile", metavar="FILE")
    backend = ideal.add_mutually_exclusive_group()
    backend.add_argument("--exact", action="store_true",
                         help="exact rational backend (default for rational files)")
    backend.add_argument("--approx", action="store_true",
                         help="floating backend (default for complex files)")
    ideal.add_argument("--tol", type=float, default=1e-8, metavar="X")
    ideal.add_argument(
        "--ranks", metavar="K=R,...",
        help="imposed evaluation-matrix ranks per degree (approximate backend)",
    )
    ideal.add_argument("--minimize", action="store_true",
                       help="remove redundant generators")
    ideal.add_argument("--rationalize", action="store_true",
                       help="recover rational coefficients by continued fractions")
    ideal.add_argument("--max-den", type=int, default=10**6, metavar="N",
                       help="denominator bound for --rationalize")
    ideal.add_argument("--verify", choices=("substitution", "points"),
                       help="check the generators exactly (substitution into "
                       "--parametrization) or numerically (on the input points)")
    ideal.add_argument("--parametrization", metavar="FILE",
                       help="needed by --verify substitution")
    ideal.add_argument("--strict", action="store_true",
                       help="exit 2 if any warning was recorded")
    _output_flags(ideal)

    bnd = sub.add_parser("bounds", help="degree bounds and point counts for a profile")
    bnd.add_argument("--profile", metavar="FILE")
    bnd.add_argument("--n", type=int, help="ambient projective dimension")
    bnd.add_argument("--d", type=int, help="curve degree (or an upper bound)")
    bnd.add_argument("--genus", type=int)
    bnd.add_argument("--curve-class", choices=PROFILE_CLASSES, default=None)
    bnd.add_argument("--divisor-degree", type=int)
    bnd.add_argument("--linear-relations", type=int, default=0,
                     help="declared dim I_1 for degenerate curves")
    _output_flags(bnd)
    return parser


def _output_flags(p):
    p.add_argument("--out", metavar="PATH", help="write the result here (JSON)")
    p.add_argument("--format", choices=("json", "text"), default="json",
                   help="stdout format when --out is not given")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        if args.command == "sample":
            return _cmd_sample(args)
        if args.command == "ideal":
            return _cmd_ideal(args)
        return _cmd_bounds(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (InputFormatError, ProfileError, OSError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _read_json_object(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise _InputError(str(exc)) from None
    except json.JSONDecodeError as exc:
        raise _InputError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(data, dict):
        raise _InputError(f"{path}: expected a JSON object")
    return data


def _profile_from_file(path) -> CurveProfile:
    data = _read_json_object(path)
    known = {"n", "d", "g", "class", "curve_class", "divisor_degree", "linear_relations"}
    for key in data:
        if key not in known:
            raise _InputError(f"{path}: unknown profile key '{key}'")
    for key in ("n", "d"):
        if key not in data:
            raise _InputError(f"{path}: profile needs '{key}'")
    cls = data.get("class", data.get("curve_class", "generic"))
    try:
        return CurveProfile(
            n=data["n"],
            d=data["d"],
            g=data.get("g"),
            curve_class=cls,
            divisor_degree=data.get("divisor_degree"),
            linear_relations=data.get("linear_relations", 0),
        )
    except (ProfileError, TypeError) as exc:
        raise _InputError(f"{path}: {exc}") from None


def _profile_from_args(args) -> CurveProfile:
    if args.profile is not None:
        if args.n is not None or args.d is not None:
            raise _InputError("give either --profile or inline --n/--d, not both")
        return _profile_from_file(args.profile)
    if args.n is None or args.d is None:
        raise _InputError("bounds needs --profile FILE or both --n and --d")
    try:
        return CurveProfile(
            n=args.n,
            d=args.d,
            g=args.genus,
            curve_class=args.curve_class or "generic",
            divisor_degree=args.divisor_degree,
            linear_relations=args.linear_relations,
        )
    except ProfileError as exc:
        raise _InputError(str(exc)) from None


def _parse_ranks(text) -> dict[int, int]:
    ranks = {}
    for chunk in text.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise _InputError(f"--ranks entry '{chunk}' is not K=R")
        k_text, r_text = chunk.split("=", 1)
        try:
            k, r = int(k_text), int(r_text)
        except ValueError:
            raise _InputError(f"--ranks entry '{chunk}' is not K=R with integers") from None
        if k < 1 or r < 0:
            raise _InputError(f"--ranks entry '{chunk}' out of range")
        ranks[k] = r
    return ranks


def _emit(document: dict, args, text_renderer, writer=None):
    if args.out:
        if writer is not None:
            writer(args.out)
        else:
            with open(args.out, "w", encoding="utf-8") as fh:
                json.dump(document, fh, indent=1)
                fh.write("\n")
        print(f"wrote {args.out}")
    elif args.format == "json":
        print(json.dumps(document, indent=1))
    else:
        print(text_renderer())


def _cmd_sample(args) -> int:
    P = read_parametrization(args.parametrization)
    if args.t_values is not None and args.count is not None:
        raise _InputError("give --count or --t-values, not both")
    if args.t_values is not None:
        try:
            values = [Fraction(v.strip()) for v in args.t_values.split(",") if v.strip()]
        except (ValueError, ZeroDivisionError) as exc:
            raise _InputError(f"--t-values: {exc}") from None
        if not values:
            raise _InputError("--t-values is empty")
        R = sample_exact_rational(P, values)
    else:
        h = args.count
        if h is None:
            try:
                profile = CurveProfile(n=P.n, d=P.degree)
            except ProfileError as exc:
                raise _InputError(
                    f"no default count for this parametrization ({exc}); pass --count"
                ) from None
            h = required_points(degree_bound(profile).max_degree, P.degree)
        R = sample_roots_of_unity(P, h)

    def text():
        lines = [f"{len(R)} points in P^{R.n} ({R.field_kind})"]
        for i, p in enumerate(R.points):
            lines.append(f"  {i}: " + ", ".join(str(c) for c in p.coordinates))
        return "\n".join(lines)

    _emit(points_document(R), args, text, writer=lambda path: write_points(R, path))
    return 0


def _cmd_bounds(args) -> int:
    p = _profile_from_args(args)
    db = degree_bound(p)
    m = db.max_degree
    predicted = {}
    degD = class_divisor_degree(p)
    if degD is not None:
        ks = db.value if isinstance(db.value, tuple) else range(1, m + 1)
        for k in ks:
            try:
                predicted[str(k)] = predicted_complement_size(k, degD, p.g)
            except ProfileError:
                pass
    document = {
        "profile": {
            "n": p.n,
            "d": p.d,
            "g": p.g,
            "curve_class": p.curve_class,
            "divisor_degree": p.divisor_degree,
            "linear_relations": p.linear_relations,
        },
        "bound": list(db.value) if isinstance(db.value, tuple) else db.value,
        "rule": db.rule,
        "max_degree": m,
        "required_points": required_points(m, p.d),
        "predicted_complement_sizes": predicted,
    }

    def text():
        shape = (
            f"degrees {sorted(db.value)}" if isinstance(db.value, tuple)
            else f"degree at most {db.value}"
        )
        lines = [
            f"class {p.curve_class}: generators of {shape} ({db.rule})",
            f"required points: {document['required_points']}",
        ]
        if predicted:
            sizes = ", ".join(f"|N_{k}| = {v}" for k, v in predicted.items())
            lines.append(f"predicted complement sizes: {sizes}")
        return "\n".join(lines)

    _emit(document, args, text)
    return 0


def _cmd_ideal(args) -> int:
    if args.tol <= 0 or args.tol >= 1:
        raise _InputError("--tol must lie strictly between 0 and 1")
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        return _run_ideal(args, caught)


def _run_ideal(args, caught) -> int:
    R = read_points(args.points)
    if args.exact and R.field_kind == "approximate":
        raise _InputError("--exact needs a rational points file")
    backend = "exact" if args.exact else "approx" if args.approx else (
        "exact" if R.field_kind == "exact" else "approx"
    )
    if backend == "approx" and R.field_kind == "exact":
        R = PointSet.approximate(
            [[complex(c) for c in p.coordinates] for p in R.points]
        )
    profile = _profile_from_file(args.profile) if args.profile else None
    s = args.degree_bound if args.degree_bound is not None else degree_bound(profile).max_degree
    if s < 1:
        raise _InputError("the degree bound must be at least 1")
    if args.ranks and backend == "exact":
        raise _InputError("--ranks applies to the approximate backend")
    ranks = _parse_ranks(args.ranks) if args.ranks else {}
    if not ranks and profile is not None and backend == "approx":
        degD = class_divisor_degree(profile)
        if degD is not None:
            for k in range(1, s + 1):
                try:
                    ranks[k] = predicted_complement_size(k, degD, profile.g)
                except ProfileError:
                    pass

    timings = {}
    t0 = time.perf_counter()
    if backend == "exact":
        run = border_basis_with_complement(points_oracle(R, tol=args.tol), R.n, s)
    else:
        run = border_basis_approx(R, s, ranks=ranks or None, tol=args.tol)
    timings["border_basis"] = time.perf_counter() - t0

    out_gens = run.generators
    diagnostics = {
        "backend": backend,
        "tolerance": args.tol,
        "degree_bound": s,
        "imposed_ranks": {str(k): v for k, v in sorted(ranks.items())},
        "complement_sizes": list(run.complement.sizes()),
        "generator_counts": {str(k): v for k, v in run.counts().items()},
        "degenerate": run.degenerate,
        "dim_I1": run.linear_relations,
        "per_degree": {str(k): v for k, v in run.reports.items()},
    }

    if args.minimize:
        t0 = time.perf_counter()
        if out_gens.kind == "border":
            report = minimal_basis_border(run.complement, out_gens, tol=args.tol) \
                if backend == "approx" else minimal_basis_border(run.complement, out_gens)
        elif backend == "exact":
            report = minimal_basis(run.complement, out_gens)
        else:
            report = minimal_basis_approx(run.complement, out_gens, tol=args.tol)
        timings["minimize"] = time.perf_counter() - t0
        out_gens = report.minimal
        diagnostics["minimization"] = {
            "counts": {str(k): v for k, v in report.minimal.counts().items()},
            "removed_per_degree": {str(k): list(v) for k, v in report.removed_per_degree.items()},
            "kernel_dims": {str(k): v for k, v in report.kernel_dims.items()},
            "warnings": list(report.warnings),
        }

    confidence_failure = False
    if args.rationalize:
        t0 = time.perf_counter()
        policy = RationalizationPolicy(max_denominator=args.max_den)
        rrep = rationalize_generators(out_gens, policy)
        timings["rationalize"] = time.perf_counter() - t0
        diagnostics["rationalization"] = {
            "ok": rrep.ok,
            "max_denominator": policy.max_denominator,
            "failures": [
                {
                    "degree": f.degree,
                    "index": f.index,
                    "exponents": list(f.exponents),
                    "value": [f.value.real, f.value.imag],
                    "reason": f.reason,
                }
                for f in rrep.failures
            ],
        }
        if rrep.ok:
            out_gens = rrep.generators
        else:
            confidence_failure = True

    if args.verify == "substitution":
        if not args.parametrization:
            raise _InputError("--verify substitution needs --parametrization")
        P = read_parametrization(args.parametrization)
        try:
            srep = verify_by_substitution(out_gens, P)
        except TypeError as exc:
            raise _InputError(str(exc)) from None
        diagnostics["verification"] = {
            "mode": "substitution",
            "ok": srep.ok,
            "entries": [
                {"degree": e.degree, "index": e.index, "ok": e.ok} for e in srep.entries
            ],
        }
        if not srep.ok:
            confidence_failure = True
    elif args.verify == "points":
        vrep = verify_on_points(out_gens, R, tol=args.tol)
        diagnostics["verification"] = {
            "mode": "points",
            "ok": vrep.ok,
            "max_residual": vrep.max_residual,
            "entries": [
                {
                    "degree": e.degree,
                    "index": e.index,
                    "max_abs": e.max_abs,
                    "mean_abs": e.mean_abs,
                }
                for e in vrep.entries
            ],
        }
        if not vrep.ok:
            confidence_failure = True

    diagnostics["timings"] = timings
    diagnostics["warnings"] = [str(w.message) for w in caught]

    document = generators_document(out_gens, R.n, s, diagnostics)

    def text():
        lines = [
            f"backend {backend}, degree bound {s}, kind {out_gens.kind}",
            f"complement sizes: {list(run.complement.sizes())}",
        ]
        for k in range(1, s + 1):
            polys = out_gens.at(k)
            lines.append(f"degree {k}: {len(polys)} generator(s)")
            for p in polys:
                lines.append(f"  {p.to_string()}")
        for w in diagnostics["warnings"]:
            lines.append(f"warning: {w}")
        return "\n".join(lines)

    _emit(
        document, args, text,
        writer=lambda path: write_generators(out_gens, R.n, s, path, diagnostics),
    )
    for w in diagnostics["warnings"]:
        print(f"warning: {w}", file=sys.stderr)
    if confidence_failure:
        return 2
    if args.strict and (caught or diagnostics.get("minimization", {}).get("warnings")):
        return 2
    return 0
