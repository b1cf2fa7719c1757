"""Degree bounds, point counts, and complement-size predictions.

A pure formula table for classical results on generator degrees of
curve ideals.  Nothing here inspects point data: callers assert the
geometric situation through a CurveProfile and the module answers with
the matching bound, the number of points that makes the degree-bounded
computation correct (h > m*d), and, when the embedding series is known,
the Riemann-Roch value of each complement size for use as an imposed
rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

PROFILE_CLASSES = (
    "generic",
    "canonical-nonhyperelliptic",
    "complete-series",
    "bicanonical",
    "tricanonical-g2",
    "hyperelliptic-d2g",
    "hyperelliptic-d2g-1",
)


class ProfileError(ValueError):
    """A curve profile violates the hypotheses of its declared class."""


@dataclass(frozen=True)
class CurveProfile:
    """What the caller asserts about the curve.

    n is the ambient projective dimension and d the curve degree (or an
    upper bound for it).  linear_relations declares dim I_1 for
    degenerate curves; every bound is then evaluated with n replaced by
    n - linear_relations, the dimension of the span.  The hypotheses of
    each class are checked arithmetically on construction, but geometric
    assertions (irreducibility, smoothness, hyperellipticity, being
    embedded by a complete series) are the caller's responsibility and
    cannot be detected from points.
    """

    n: int
    d: int
    g: int | None = None
    curve_class: str = "generic"
    divisor_degree: int | None = None
    linear_relations: int = 0

    def __post_init__(self):
        if self.curve_class not in PROFILE_CLASSES:
            raise ProfileError(f"unknown curve class '{self.curve_class}'")
        if self.n < 2:
            raise ProfileError("the ambient dimension n must be at least 2")
        if self.d < 1:
            raise ProfileError("the curve degree d must be at least 1")
        if self.linear_relations < 0:
            raise ProfileError("linear_relations must be nonnegative")
        if self.g is not None and self.g < 0:
            raise ProfileError("the genus must be nonnegative")
        eff = self.effective_n
        cls = self.curve_class
        g = self.g
        if cls == "generic":
            if eff < 3:
                raise ProfileError(
                    "the regularity bound needs a span of dimension at least 3"
                )
            if self.d < eff:
                raise ProfileError(
                    f"a nondegenerate curve spanning a P^{eff} has degree >= {eff}"
                )
        elif cls == "canonical-nonhyperelliptic":
            self._need_genus(4)
            self._need_degree(2 * g - 2)
            self._need_span(g - 1)
        elif cls == "complete-series":
            self._need_genus(0)
            if self.d < 2 * g + 1:
                raise ProfileError(
                    f"a complete series of degree {self.d} < 2g+1 = {2 * g + 1} "
                    "gives no generation bound"
                )
            self._need_span(self.d - g)
            if self.divisor_degree is None:
                object.__setattr__(self, "divisor_degree", self.d)
            elif self.divisor_degree != self.d:
                raise ProfileError(
                    "for an embedding by a complete series the divisor degree "
                    "is the curve degree"
                )
        elif cls == "bicanonical":
            self._need_genus(3)
            self._need_degree(4 * g - 4)
            self._need_span(3 * g - 4)
            object.__setattr__(self, "divisor_degree", self.d)
        elif cls == "tricanonical-g2":
            self._need_genus(2)
            if g != 2:
                raise ProfileError("the tricanonical class is specific to genus 2")
            self._need_degree(6)
            self._need_span(4)
            object.__setattr__(self, "divisor_degree", self.d)
        elif cls == "hyperelliptic-d2g":
            self._need_genus(2)
            self._need_degree(2 * g)
        elif cls == "hyperelliptic-d2g-1":
            self._need_genus(2)
            self._need_degree(2 * g - 1)

    @property
    def effective_n(self) -> int:
        return self.n - self.linear_relations

    def _need_genus(self, least):
        if self.g is None:
            raise ProfileError(f"class '{self.curve_class}' needs the genus")
        if self.g < least:
            raise ProfileError(
                f"class '{self.curve_class}' needs genus >= {least}, got {self.g}"
            )

    def _need_degree(self, exact):
        if self.d != exact:
            raise ProfileError(
                f"class '{self.curve_class}' with genus {self.g} forces "
                f"degree {exact}, got {self.d}"
            )

    def _need_span(self, exact):
        if self.effective_n != exact:
            raise ProfileError(
                f"class '{self.curve_class}' with genus {self.g} forces a span "
                f"of dimension {exact}, got {self.effective_n}"
            )


class DegreeBound(NamedTuple):
    """A generator degree bound: a single max degree or a degree list."""

    value: int | tuple[int, ...]
    rule: str

    @property
    def max_degree(self) -> int:
        return self.value if isinstance(self.value, int) else max(self.value)


def degree_bound(p: CurveProfile) -> DegreeBound:
    """Bound on the degrees of ideal generators for the declared class.

    Generic curves get the regularity bound d - n + 2 (d - n + 1 once a
    genus above 1 is declared); the special classes get their exact
    degree lists.  n always means the effective span dimension.
    """
    eff = p.effective_n
    cls = p.curve_class
    if cls == "generic":
        m = p.d - eff + 2
        if p.g is not None and p.g > 1:
            m -= 1
        return DegreeBound(m, "glp")
    if cls == "canonical-nonhyperelliptic":
        return DegreeBound((2, 3), "petri")
    if cls == "complete-series":
        if p.d >= 2 * p.g + 2:
            return DegreeBound((2,), "saint-donat")
        return DegreeBound((2, 3), "saint-donat")
    if cls == "bicanonical":
        # deg(2K) = 4g-4 >= 2g+2 for g >= 3: quadrics suffice
        return DegreeBound((2,), "saint-donat")
    if cls == "tricanonical-g2":
        # deg(3K) = 6 = 2g+2 for g = 2: quadrics suffice
        return DegreeBound((2,), "saint-donat")
    if cls == "hyperelliptic-d2g":
        return DegreeBound((2, 3, 4), "akahori")
    return DegreeBound((2, 3, 4, 5), "akahori")


def required_points(m: int, d: int) -> int:
    """Least point count h with h > m*d, enough to bound the computation."""
    if m < 1 or d < 1:
        raise ValueError("m and d must be at least 1")
    return m * d + 1


def predicted_complement_size(k: int, degD: int, g: int) -> int:
    """Riemann-Roch prediction k*deg(D) - g + 1 for |N_k|.

    Valid when the degree-k restriction map onto the series of k*D is
    surjective (the caller's assertion) and k*deg(D) >= 2g - 1 (checked
    here, since below it the special index term does not vanish).
    """
    if k < 1 or degD < 1 or g < 0:
        raise ValueError("need k >= 1, degD >= 1, g >= 0")
    if k * degD < 2 * g - 1:
        raise ProfileError(
            f"k*deg(D) = {k * degD} < 2g-1 = {2 * g - 1}: no prediction"
        )
    return k * degD - g + 1


def class_divisor_degree(p: CurveProfile) -> int | None:
    """Divisor degree of the embedding series, when the class pins one.

    Only classes whose series makes the restriction maps surjective
    (complete series of degree >= 2g+1, or canonical models) return a
    value; generic and hyperelliptic profiles return None since no
    complement-size prediction is licensed.
    """
    if p.curve_class == "canonical-nonhyperelliptic":
        return 2 * p.g - 2
    if p.curve_class in ("complete-series", "bicanonical", "tricanonical-g2"):
        return p.divisor_degree
    return None


def parametrization_degree_bound(P) -> int:
    """Curve degree bound read off a parametrization: deg C <= deg F_i."""
    return P.degree
