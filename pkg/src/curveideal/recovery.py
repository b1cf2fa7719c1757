"""Rational recovery of floating coefficients and generator verification.

Floating border runs produce coefficients that are close to nice
rationals whenever the input points were exact in disguise.  Recovery
walks the continued-fraction convergents of each coefficient and accepts
the last one below the denominator bound only if it reproduces the float
within tolerance; everything else is reported as a failure, never as a
silently rounded value.  Verification is exact substitution of the
parametrization into each generator, plus a numerical residual check on
point sets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .monomials import GeneratorSet, HomogeneousPolynomial
from .numeric_linalg import DEFAULT_TOL
from .points import PointSet, normalize_point
from .sampling import BivariatePolynomial, Parametrization

#: Continued-fraction expansions stop after this many partial quotients.
MAX_PARTIAL_QUOTIENTS = 64


@dataclass(frozen=True)
class RationalizationPolicy:
    """Bounds for accepting a rational guess for a float."""

    max_denominator: int = 10**6
    accept_tol: float = 1e-6

    def __post_init__(self):
        if self.max_denominator < 1:
            raise ValueError("max_denominator must be at least 1")
        if not self.accept_tol > 0:
            raise ValueError("accept_tol must be positive")


DEFAULT_POLICY = RationalizationPolicy()


def rationalize(x: float, policy: RationalizationPolicy = DEFAULT_POLICY):
    """Best continued-fraction convergent of x, or None.

    Returns the last convergent p/q with q <= max_denominator, provided
    it lies within accept_tol of x; otherwise None.  Convergents are
    optimal approximations, so a None means no rational of bounded
    denominator explains the float.
    """
    x = float(x)
    if not math.isfinite(x):
        raise ValueError("rationalize needs a finite float")
    a = math.floor(x)
    p_prev, q_prev = 1, 0
    p, q = a, 1
    best = (p, q)
    frac = x - a
    for _ in range(MAX_PARTIAL_QUOTIENTS):
        if frac < 1e-18:
            break
        recip = 1.0 / frac
        a = math.floor(recip)
        frac = recip - a
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        if q > policy.max_denominator:
            break
        best = (p, q)
    guess = Fraction(best[0], best[1])
    return guess if abs(x - guess) <= policy.accept_tol else None


@dataclass(frozen=True)
class CoefficientFailure:
    """One coefficient that could not be rationalized."""

    degree: int
    index: int
    exponents: tuple[int, ...]
    value: complex
    reason: str


@dataclass
class RationalizationReport:
    """Recovered generators plus everything that resisted recovery.

    generators keeps the input kind and contains only the polynomials
    whose every coefficient was recovered; failures name the rest down
    to the offending coefficient.
    """

    generators: GeneratorSet
    failures: list[CoefficientFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def rationalize_generators(
    G: GeneratorSet, policy: RationalizationPolicy = DEFAULT_POLICY
) -> RationalizationReport:
    """Rationalize every coefficient of every generator.

    Exact coefficients pass through unchanged.  Complex ones must have
    imaginary part within accept_tol (it is snapped to zero); the real
    part goes through rationalize.  A polynomial with any failed
    coefficient is left out of the result and reported.
    """
    by_degree: dict[int, list] = {}
    failures: list[CoefficientFailure] = []
    for k in G.degrees():
        kept = []
        for i, g in enumerate(G.at(k)):
            terms = {}
            bad = False
            for m, c in g.terms.items():
                if isinstance(c, (int, Fraction)):
                    terms[m] = Fraction(c)
                    continue
                c = complex(c)
                if abs(c.imag) > policy.accept_tol:
                    failures.append(
                        CoefficientFailure(
                            k, i, m.exponents, c,
                            f"imaginary part {c.imag:.3e} above tolerance",
                        )
                    )
                    bad = True
                    continue
                value = rationalize(c.real, policy)
                if value is None:
                    failures.append(
                        CoefficientFailure(
                            k, i, m.exponents, c,
                            f"no convergent with denominator <= "
                            f"{policy.max_denominator} within tolerance",
                        )
                    )
                    bad = True
                elif value != 0:
                    terms[m] = value
            if bad:
                continue
            if not terms:
                failures.append(
                    CoefficientFailure(
                        k, i, (), complex(0),
                        "polynomial vanished entirely after rationalization",
                    )
                )
                continue
            kept.append(HomogeneousPolynomial(terms, degree=k))
        by_degree[k] = kept
    return RationalizationReport(GeneratorSet(by_degree, G.kind), failures)


@dataclass(frozen=True)
class SubstitutionEntry:
    """Exact substitution outcome for one generator."""

    degree: int
    index: int
    ok: bool
    residual: BivariatePolynomial | None


@dataclass
class SubstitutionReport:
    entries: list[SubstitutionEntry]

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)


def verify_by_substitution(G: GeneratorSet, P: Parametrization) -> SubstitutionReport:
    """Substitute the parametrization into each generator, exactly.

    g belongs to the curve's ideal only if g(F_0, ..., F_n) is the zero
    bivariate polynomial.  Coefficients must be exact; the report lists
    each generator's outcome with the residual polynomial on failure.
    """
    entries = []
    powers: dict[tuple[int, int], BivariatePolynomial] = {}

    def power(i, e):
        key = (i, e)
        if key not in powers:
            powers[key] = P.components[i] ** e
        return powers[key]

    for k in G.degrees():
        for idx, g in enumerate(G.at(k)):
            total = BivariatePolynomial.zero(k * P.degree)
            for m, c in g.terms.items():
                if not isinstance(c, (int, Fraction)):
                    raise TypeError(
                        "verify_by_substitution needs exact coefficients; "
                        "rationalize first"
                    )
                if m.nvars != P.n + 1:
                    raise ValueError(
                        f"generator in {m.nvars} variables against a "
                        f"parametrization of P^{P.n}"
                    )
                prod = None
                for v, e in enumerate(m.exponents):
                    if e:
                        pw = power(v, e)
                        prod = pw if prod is None else prod * pw
                total = total + Fraction(c) * prod
            ok = total.is_zero()
            entries.append(SubstitutionEntry(k, idx, ok, None if ok else total))
    return SubstitutionReport(entries)


@dataclass(frozen=True)
class ResidualEntry:
    """Pointwise residual summary for one generator."""

    degree: int
    index: int
    max_abs: float
    mean_abs: float


@dataclass
class ResidualReport:
    entries: list[ResidualEntry]
    tol: float

    @property
    def max_residual(self) -> float:
        return max((e.max_abs for e in self.entries), default=0.0)

    @property
    def ok(self) -> bool:
        return self.max_residual <= self.tol


def verify_on_points(
    G: GeneratorSet, R: PointSet, tol: float = DEFAULT_TOL
) -> ResidualReport:
    """Max and mean |g(point)| per generator, on normalized points."""
    coords = [normalize_point(p).coordinates for p in R.points]
    entries = []
    for k in G.degrees():
        for idx, g in enumerate(G.at(k)):
            values = [abs(g.evaluate(c)) for c in coords]
            entries.append(
                ResidualEntry(
                    k, idx,
                    float(max(values)),
                    float(sum(values) / len(values)),
                )
            )
    return ResidualReport(entries, tol)
