"""Homogeneous curve parametrizations and point sampling.

A parametrization is a tuple of bivariate homogeneous polynomials of one
common degree, exact down to the coefficient.  Sampling fixes the affine
chart s = 1 and walks t over roots of unity (floating, the
well-conditioned default) or caller-chosen rationals (exact backend).
The same exact arithmetic powers the substitution check in recovery, so
the polynomial type lives here once.
"""

from __future__ import annotations

import cmath
from fractions import Fraction

from .points import PointSet

#: A sampled point whose largest coordinate modulus falls below this is
#: treated as the zero vector (a base point of the parametrization).
ZERO_POINT_TOL = 1e-12


class BivariatePolynomial:
    """Homogeneous polynomial in the parameters (s, t).

    Stored densely by t-exponent: coeffs[i] multiplies s^(d-i) * t^i,
    with exact Fraction coefficients.  The zero polynomial of degree d is
    the all-zero vector of length d+1; arithmetic keeps degrees honest
    (addition requires equal degrees, multiplication adds them).
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, coeffs):
        coeffs = tuple(Fraction(c) if not isinstance(c, Fraction) else c for c in coeffs)
        if not coeffs:
            raise ValueError("need at least the degree-0 coefficient")
        self.coeffs = coeffs
        self.degree = len(coeffs) - 1

    @classmethod
    def zero(cls, degree: int) -> "BivariatePolynomial":
        return cls([Fraction(0)] * (degree + 1))

    @classmethod
    def from_terms(cls, terms) -> "BivariatePolynomial":
        """Build from (coeff, e_s, e_t) triples, all of one total degree."""
        terms = list(terms)
        if not terms:
            raise ValueError("from_terms needs at least one term")
        degree = terms[0][1] + terms[0][2]
        coeffs = [Fraction(0)] * (degree + 1)
        for c, e_s, e_t in terms:
            if e_s < 0 or e_t < 0:
                raise ValueError(f"negative exponent in term ({c}, {e_s}, {e_t})")
            if e_s + e_t != degree:
                raise ValueError(
                    f"term s^{e_s} t^{e_t} has degree {e_s + e_t}, expected {degree}"
                )
            coeffs[e_t] += Fraction(c)
        return cls(coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __add__(self, other):
        if self.degree != other.degree:
            raise ValueError("cannot add homogeneous polynomials of different degrees")
        return BivariatePolynomial([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        if self.degree != other.degree:
            raise ValueError("cannot subtract polynomials of different degrees")
        return BivariatePolynomial([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        if isinstance(other, BivariatePolynomial):
            out = [Fraction(0)] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    if b != 0:
                        out[i + j] += a * b
            return BivariatePolynomial(out)
        c = Fraction(other)
        return BivariatePolynomial([c * a for a in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = BivariatePolynomial([Fraction(1)])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def evaluate(self, s_val, t_val):
        """Value at (s, t); coordinates may be exact or complex."""
        total = 0
        for i, c in enumerate(self.coeffs):
            if c != 0:
                total = total + c * s_val ** (self.degree - i) * t_val**i
        return total

    def terms(self):
        """Nonzero (coeff, e_s, e_t) triples, by increasing t-exponent."""
        return [
            (c, self.degree - i, i) for i, c in enumerate(self.coeffs) if c != 0
        ]

    def __eq__(self, other):
        return (
            isinstance(other, BivariatePolynomial)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        if self.is_zero():
            return f"BivariatePolynomial(0, degree={self.degree})"
        parts = []
        for c, e_s, e_t in self.terms():
            factors = []
            if e_s:
                factors.append(f"s^{e_s}" if e_s > 1 else "s")
            if e_t:
                factors.append(f"t^{e_t}" if e_t > 1 else "t")
            parts.append(f"{c}*" + "*".join(factors) if factors else f"{c}")
        return "BivariatePolynomial(" + " + ".join(parts) + ")"


class Parametrization:
    """A rational map P^1 -> P^n: n+1 components of one common degree."""

    __slots__ = ("n", "degree", "components")

    def __init__(self, components):
        components = tuple(components)
        if len(components) < 2:
            raise ValueError("a parametrization needs at least two components")
        degree = components[0].degree
        for i, comp in enumerate(components):
            if comp.degree != degree:
                raise ValueError(
                    f"component {i} has degree {comp.degree}, expected {degree}"
                )
        if all(comp.is_zero() for comp in components):
            raise ValueError("all components are identically zero")
        self.components = components
        self.n = len(components) - 1
        self.degree = degree

    def evaluate(self, s_val, t_val):
        return tuple(comp.evaluate(s_val, t_val) for comp in self.components)

    def __repr__(self):
        return f"Parametrization(n={self.n}, degree={self.degree})"


def sample_roots_of_unity(P: Parametrization, h: int) -> PointSet:
    """Points P(1, exp(2*pi*i*k/h)) for k = 1..h, normalized complexes.

    Deterministic in k; a numerically zero image means t hit a base
    point of the parametrization and is an error naming k.
    """
    if h < 1:
        raise ValueError("need at least one sample")
    rows = []
    for k in range(1, h + 1):
        t = cmath.exp(2j * cmath.pi * k / h)
        coords = [complex(v) for v in P.evaluate(complex(1.0), t)]
        if max(abs(c) for c in coords) <= ZERO_POINT_TOL:
            raise ValueError(
                f"sample k={k} (t = exp(2*pi*i*{k}/{h})) lands on a base point"
            )
        rows.append(coords)
    return PointSet.approximate(rows)


def sample_exact_rational(P: Parametrization, params) -> PointSet:
    """Exact points P(1, t) for caller-chosen rational t values.

    Rejects float parameters (exactness would be a lie), zero images,
    and projectively duplicate points.
    """
    values = []
    for t in params:
        if isinstance(t, float):
            raise TypeError("exact sampling takes int/str/Fraction parameters")
        values.append(Fraction(t))
    if not values:
        raise ValueError("need at least one parameter value")
    rows = []
    for t in values:
        coords = P.evaluate(Fraction(1), t)
        if all(c == 0 for c in coords):
            raise ValueError(f"parameter t = {t} lands on a base point")
        rows.append(coords)
    return PointSet.exact(rows)
