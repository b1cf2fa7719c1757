"""Projective point sets and their monomial evaluation matrices.

Points carry either exact rational or complex floating coordinates.
Approximate points are normalized on ingestion (largest-modulus
coordinate scaled to exactly 1) so later residual bounds are meaningful;
exact points may stay as given since scaling never changes a kernel.
"""

from __future__ import annotations

import warnings
from fractions import Fraction

import numpy as np

from .monomials import MonomialSet
from .rational_linalg import ExactMatrix

FIELD_KINDS = ("exact", "approximate")

#: Two normalized approximate points closer than this (max coordinate
#: difference) are reported as probable duplicates.
NEAR_DUPLICATE_TOL = 1e-12


class DuplicatePointError(ValueError):
    """An exact point set contains projectively equal points."""


class DuplicatePointWarning(UserWarning):
    """An approximate point set contains nearly equal points."""


class Point:
    """One projective point: a nonzero coordinate tuple plus a flag
    recording whether it has been scaled to leading-one form."""

    __slots__ = ("coordinates", "normalized")

    def __init__(self, coordinates, normalized=False):
        coords = tuple(coordinates)
        if not coords:
            raise ValueError("a point needs at least one coordinate")
        if all(c == 0 for c in coords):
            raise ValueError("the zero vector is not a projective point")
        self.coordinates = coords
        self.normalized = bool(normalized)

    @property
    def nvars(self) -> int:
        return len(self.coordinates)

    def __repr__(self):
        return f"Point({self.coordinates}, normalized={self.normalized})"


def normalize_point(p: Point) -> Point:
    """Scale so the first coordinate of largest modulus becomes exactly 1.

    Idempotent: normalized points pass through unchanged, and a point
    whose leading coordinate already equals 1 is only re-flagged.
    """
    if p.normalized:
        return p
    mods = [abs(c) for c in p.coordinates]
    lead = max(range(len(mods)), key=lambda i: (mods[i], -i))
    c = p.coordinates[lead]
    if c == 1:
        return Point(p.coordinates, normalized=True)
    scaled = [x / c for x in p.coordinates]
    one = Fraction(1) if isinstance(c, (int, Fraction)) else complex(1.0)
    scaled[lead] = one
    return Point(scaled, normalized=True)


def _proportional(p, q) -> bool:
    """Projective equality test by cross products, exact arithmetic."""
    for i in range(len(p)):
        if p[i] != 0:
            if q[i] == 0:
                return False
            return all(p[j] * q[i] == q[j] * p[i] for j in range(len(p)))
    return False


class PointSet:
    """A nonempty list of points in one projective space, one field kind."""

    __slots__ = ("n", "points", "field_kind")

    def __init__(self, points, field_kind):
        if field_kind not in FIELD_KINDS:
            raise ValueError(f"field_kind must be one of {FIELD_KINDS}")
        points = tuple(points)
        if not points:
            raise ValueError("a point set needs at least one point")
        nv = points[0].nvars
        for p in points:
            if p.nvars != nv:
                raise ValueError("points disagree on coordinate count")
        self.n = nv - 1
        self.points = points
        self.field_kind = field_kind

    @classmethod
    def exact(cls, coords) -> "PointSet":
        """Build an exact rational point set; duplicates are an error."""
        pts = []
        for raw in coords:
            converted = []
            for x in raw:
                if isinstance(x, float):
                    raise TypeError("exact points take int/str/Fraction coordinates")
                converted.append(Fraction(x))
            pts.append(Point(converted))
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                if _proportional(pts[i].coordinates, pts[j].coordinates):
                    raise DuplicatePointError(f"points {i} and {j} coincide projectively")
        return cls(pts, "exact")

    @classmethod
    def approximate(cls, coords) -> "PointSet":
        """Build a complex point set, normalizing every point on ingestion."""
        pts = [normalize_point(Point([complex(x) for x in raw])) for raw in coords]
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                diff = max(
                    abs(a - b)
                    for a, b in zip(pts[i].coordinates, pts[j].coordinates)
                )
                if diff < NEAR_DUPLICATE_TOL:
                    warnings.warn(
                        f"points {i} and {j} agree to within {NEAR_DUPLICATE_TOL}",
                        DuplicatePointWarning,
                        stacklevel=2,
                    )
        return cls(pts, "approximate")

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __repr__(self):
        return f"PointSet(n={self.n}, size={len(self.points)}, {self.field_kind})"


def evaluation_matrix(R: PointSet, S: MonomialSet):
    """Matrix of monomial values, rows indexed by points, columns by S.

    Exact point sets give an ExactMatrix of Fractions, approximate sets a
    complex ndarray.  Powers are built once per point up to the degree of
    S, then each entry is a short product, so assembly is deterministic
    and cheap.
    """
    if S.nvars != R.n + 1:
        raise ValueError(f"monomials have {S.nvars} variables, points have {R.n + 1}")
    h, t, deg = len(R), len(S), S.degree
    if R.field_kind == "exact":
        rows = []
        for p in R.points:
            table = []
            for c in p.coordinates:
                powers = [Fraction(1)]
                for _ in range(deg):
                    powers.append(powers[-1] * c)
                table.append(powers)
            rows.append(
                [
                    _product(table, m.exponents)
                    for m in S
                ]
            )
        return ExactMatrix(rows, cols=t)
    coords = np.array([p.coordinates for p in R.points], dtype=complex)
    if t == 0:
        return np.zeros((h, 0), dtype=complex)
    exps = np.array([m.exponents for m in S], dtype=np.int64)
    pows = coords[:, :, None] ** np.arange(deg + 1)
    vidx = np.broadcast_to(np.arange(R.n + 1), exps.shape)
    return pows[:, vidx, exps].prod(axis=2)


def _product(table, exponents):
    value = Fraction(1)
    for v, e in enumerate(exponents):
        if e:
            value *= table[v][e]
    return value
