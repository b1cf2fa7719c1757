"""JSON file formats for points, parametrizations, and generators.

Rational values travel as "p/q" strings (never floats), complex ones as
[re, im] double pairs, so write-then-read reproduces exact values
exactly and floating values bit for bit.  Readers validate shape eagerly
and name the offending entry in every error.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .monomials import GeneratorSet, HomogeneousPolynomial, Monomial
from .points import PointSet
from .sampling import BivariatePolynomial, Parametrization


class InputFormatError(ValueError):
    """A data file does not match its documented shape."""


def _load(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(data, dict):
        raise InputFormatError(f"{path}: expected a JSON object at top level")
    return data


def _dump(data, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=1)
        fh.write("\n")


def _need(data, key, where):
    if key not in data:
        raise InputFormatError(f"{where}: missing key '{key}'")
    return data[key]


def _rational(raw, where) -> Fraction:
    if isinstance(raw, bool) or isinstance(raw, float):
        raise InputFormatError(
            f"{where}: rational values must be strings like \"p/q\" or integers, "
            f"got {raw!r}"
        )
    if isinstance(raw, (int, str)):
        try:
            return Fraction(raw)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputFormatError(f"{where}: bad rational {raw!r} ({exc})") from None
    raise InputFormatError(f"{where}: bad rational {raw!r}")


def _complex(raw, where) -> complex:
    if (
        not isinstance(raw, list)
        or len(raw) != 2
        or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in raw)
    ):
        raise InputFormatError(f"{where}: complex values must be [re, im] pairs, got {raw!r}")
    return complex(float(raw[0]), float(raw[1]))


def read_points(path) -> PointSet:
    """Read a points file: {"n", "field": "rational"|"complex", "points"}."""
    data = _load(path)
    n = _need(data, "n", path)
    if not isinstance(n, int) or n < 1:
        raise InputFormatError(f"{path}: 'n' must be a positive integer")
    field = _need(data, "field", path)
    if field not in ("rational", "complex"):
        raise InputFormatError(f"{path}: 'field' must be 'rational' or 'complex'")
    rows = _need(data, "points", path)
    if not isinstance(rows, list) or not rows:
        raise InputFormatError(f"{path}: 'points' must be a nonempty list")
    parsed = []
    for i, row in enumerate(rows):
        where = f"{path}: point {i}"
        if not isinstance(row, list) or len(row) != n + 1:
            raise InputFormatError(f"{where}: expected {n + 1} coordinates")
        if field == "rational":
            parsed.append([_rational(c, where) for c in row])
        else:
            parsed.append([_complex(c, where) for c in row])
    return PointSet.exact(parsed) if field == "rational" else PointSet.approximate(parsed)


def points_document(R: PointSet) -> dict:
    if R.field_kind == "exact":
        rows = [[str(c) for c in p.coordinates] for p in R.points]
        field = "rational"
    else:
        rows = [[[c.real, c.imag] for c in p.coordinates] for p in R.points]
        field = "complex"
    return {"n": R.n, "field": field, "points": rows}


def write_points(R: PointSet, path):
    _dump(points_document(R), path)


def read_parametrization(path) -> Parametrization:
    """Read {"n", "degree", "components": [[{"coeff","e_s","e_t"},...],...]}."""
    data = _load(path)
    n = _need(data, "n", path)
    degree = _need(data, "degree", path)
    if not isinstance(n, int) or n < 1:
        raise InputFormatError(f"{path}: 'n' must be a positive integer")
    if not isinstance(degree, int) or degree < 1:
        raise InputFormatError(f"{path}: 'degree' must be a positive integer")
    comps_raw = _need(data, "components", path)
    if not isinstance(comps_raw, list) or len(comps_raw) != n + 1:
        raise InputFormatError(f"{path}: 'components' must list {n + 1} polynomials")
    comps = []
    for ci, comp in enumerate(comps_raw):
        where = f"{path}: component {ci}"
        if not isinstance(comp, list):
            raise InputFormatError(f"{where}: expected a list of terms")
        triples = []
        for ti, term in enumerate(comp):
            twhere = f"{where}, term {ti}"
            if not isinstance(term, dict):
                raise InputFormatError(f"{twhere}: expected an object")
            coeff = _rational(_need(term, "coeff", twhere), twhere)
            e_s = _need(term, "e_s", twhere)
            e_t = _need(term, "e_t", twhere)
            for name, e in (("e_s", e_s), ("e_t", e_t)):
                if not isinstance(e, int) or e < 0:
                    raise InputFormatError(f"{twhere}: '{name}' must be a nonnegative integer")
            if e_s + e_t != degree:
                raise InputFormatError(
                    f"{twhere}: degree {e_s + e_t} does not match the declared {degree}"
                )
            triples.append((coeff, e_s, e_t))
        comps.append(
            BivariatePolynomial.from_terms(triples)
            if triples
            else BivariatePolynomial.zero(degree)
        )
    try:
        return Parametrization(comps)
    except ValueError as exc:
        raise InputFormatError(f"{path}: {exc}") from None


def write_parametrization(P: Parametrization, path):
    comps = []
    for comp in P.components:
        comps.append(
            [{"coeff": str(c), "e_s": e_s, "e_t": e_t} for c, e_s, e_t in comp.terms()]
        )
    _dump({"n": P.n, "degree": P.degree, "components": comps}, path)


def _encode_coeff(c):
    if isinstance(c, (int, Fraction)):
        return str(Fraction(c))
    c = complex(c)
    return [c.real, c.imag]


def _decode_coeff(raw, where):
    if isinstance(raw, list):
        return _complex(raw, where)
    return _rational(raw, where)


def read_generators(path) -> tuple[GeneratorSet, dict]:
    """Read a generators file; returns the set and the metadata dict."""
    data = _load(path)
    n = _need(data, "n", path)
    kind = _need(data, "kind", path)
    by_degree_raw = _need(data, "by_degree", path)
    if not isinstance(n, int) or n < 1:
        raise InputFormatError(f"{path}: 'n' must be a positive integer")
    if not isinstance(by_degree_raw, dict):
        raise InputFormatError(f"{path}: 'by_degree' must be an object")
    by_degree = {}
    for key, polys in by_degree_raw.items():
        try:
            k = int(key)
        except ValueError:
            raise InputFormatError(f"{path}: degree key {key!r} is not an integer") from None
        if not isinstance(polys, list):
            raise InputFormatError(f"{path}: degree {k} must hold a list")
        parsed = []
        for pi, poly in enumerate(polys):
            where = f"{path}: degree {k}, polynomial {pi}"
            if not isinstance(poly, dict) or "terms" not in poly:
                raise InputFormatError(f"{where}: expected an object with 'terms'")
            terms = {}
            for ti, term in enumerate(poly["terms"]):
                twhere = f"{where}, term {ti}"
                if not isinstance(term, dict):
                    raise InputFormatError(f"{twhere}: expected an object")
                exps = _need(term, "exponents", twhere)
                if (
                    not isinstance(exps, list)
                    or len(exps) != n + 1
                    or not all(isinstance(e, int) and e >= 0 for e in exps)
                ):
                    raise InputFormatError(
                        f"{twhere}: 'exponents' must be {n + 1} nonnegative integers"
                    )
                coeff = _decode_coeff(_need(term, "coeff", twhere), twhere)
                mono = Monomial(exps)
                if mono.degree != k:
                    raise InputFormatError(
                        f"{twhere}: monomial degree {mono.degree} under degree key {k}"
                    )
                if mono in terms:
                    raise InputFormatError(f"{twhere}: duplicate monomial")
                terms[mono] = coeff
            try:
                parsed.append(HomogeneousPolynomial(terms, degree=k))
            except ValueError as exc:
                raise InputFormatError(f"{where}: {exc}") from None
        by_degree[k] = parsed
    try:
        gens = GeneratorSet(by_degree, kind)
    except ValueError as exc:
        raise InputFormatError(f"{path}: {exc}") from None
    meta = {key: data[key] for key in data if key not in ("by_degree", "kind")}
    return gens, meta


def _json_safe(value):
    if isinstance(value, dict):
        return {str(k): _json_safe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return float(value)
    if hasattr(value, "item"):
        return _json_safe(value.item())
    return str(value)


def generators_document(G: GeneratorSet, n: int, degree_bound: int, diagnostics=None) -> dict:
    by_degree = {}
    for k in G.degrees():
        by_degree[str(k)] = [
            {
                "terms": [
                    {"exponents": list(m.exponents), "coeff": _encode_coeff(c)}
                    for m, c in sorted(
                        p.terms.items(), key=lambda mc: mc[0].exponents, reverse=True
                    )
                ]
            }
            for p in G.at(k)
        ]
    return {
        "n": n,
        "degree_bound": degree_bound,
        "kind": G.kind,
        "by_degree": by_degree,
        "diagnostics": _json_safe(diagnostics or {}),
    }


def write_generators(G: GeneratorSet, n: int, degree_bound: int, path, diagnostics=None):
    _dump(generators_document(G, n, degree_bound, diagnostics), path)
