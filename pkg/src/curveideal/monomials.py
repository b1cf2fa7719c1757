"""Monomials, graded monomial sets, and homogeneous polynomials.

These are the value types shared by every pipeline stage: exponent-vector
monomials interned per exponent tuple, canonically ordered single-degree
monomial sets, sparse homogeneous polynomials with exact rational or
complex coefficients, and the graded containers (complements and
generator sets) produced by the basis algorithms.

All types are immutable values and all functions are pure, so everything
here can be shared freely between concurrent tasks.
"""

from __future__ import annotations

import math
from fractions import Fraction

#: Canonical member order of a MonomialSet: graded lexicographic with
#: x0 > x1 > ... > xn.  This fixes matrix column indexing and output
#: order; no algorithmic result depends on it beyond presentation.
CANONICAL_ORDER = "grlex(x0>...>xn)"

#: enumerate_monomials refuses to materialize sets larger than this.
MAX_ENUMERATION = 5_000_000

GENERATOR_KINDS = ("border", "intermediate", "minimal")


class CapacityError(Exception):
    """A requested enumeration would exceed the in-memory budget."""


class SupportError(ValueError):
    """A polynomial's support is not contained in the target monomial set."""


class Monomial:
    """A power product of x0..xn stored as an exponent tuple.

    Instances are interned: constructing the same exponent vector twice
    yields the same object, so hashing and equality are cheap even inside
    large set operations.
    """

    __slots__ = ("exponents", "degree", "_hash")

    _interned: dict[tuple[int, ...], "Monomial"] = {}

    def __new__(cls, exponents):
        key = tuple(int(e) for e in exponents)
        cached = cls._interned.get(key)
        if cached is not None:
            return cached
        if not key:
            raise ValueError("a monomial needs at least one variable")
        if any(e < 0 for e in key):
            raise ValueError(f"negative exponent in {key}")
        self = super().__new__(cls)
        self.exponents = key
        self.degree = sum(key)
        self._hash = hash(key)
        cls._interned[key] = self
        return self

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    def times_variable(self, i: int) -> "Monomial":
        """Product of this monomial with the single variable x_i."""
        e = list(self.exponents)
        e[i] += 1
        return Monomial(e)

    def evaluate(self, coords):
        """Value at a coordinate tuple (rational or complex entries)."""
        value = 1
        for c, e in zip(coords, self.exponents, strict=True):
            if e:
                value = value * c**e
        return value

    def to_string(self, names=None) -> str:
        if self.degree == 0:
            return "1"
        if names is None:
            names = [f"x{i}" for i in range(self.nvars)]
        parts = []
        for name, e in zip(names, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Monomial{self.exponents}"


def _canonical(monomials):
    return sorted(monomials, key=lambda m: m.exponents, reverse=True)


class MonomialSet:
    """Duplicate-free monomials of a single degree in canonical order.

    Empty sets are allowed but must state their degree and variable count
    explicitly, since neither can be inferred from members.
    """

    __slots__ = ("degree", "nvars", "members", "order_tag", "_positions")

    def __init__(self, members, degree=None, nvars=None):
        unique = _canonical(set(members))
        if unique:
            first = unique[0]
            for m in unique:
                if m.degree != first.degree:
                    raise ValueError(
                        f"mixed degrees {m.degree} and {first.degree} in one MonomialSet"
                    )
                if m.nvars != first.nvars:
                    raise ValueError("mixed variable counts in one MonomialSet")
            if degree is not None and degree != first.degree:
                raise ValueError(f"declared degree {degree} but members have {first.degree}")
            if nvars is not None and nvars != first.nvars:
                raise ValueError(f"declared {nvars} variables but members have {first.nvars}")
            self.degree = first.degree
            self.nvars = first.nvars
        else:
            if degree is None or nvars is None:
                raise ValueError("an empty MonomialSet needs explicit degree and nvars")
            self.degree = int(degree)
            self.nvars = int(nvars)
        self.members = tuple(unique)
        self.order_tag = CANONICAL_ORDER
        self._positions = {m: i for i, m in enumerate(self.members)}

    def index(self, m: Monomial) -> int:
        return self._positions[m]

    def difference(self, other: "MonomialSet") -> "MonomialSet":
        if (other.degree, other.nvars) != (self.degree, self.nvars):
            raise ValueError("difference needs sets of equal degree and variable count")
        kept = [m for m in self.members if m not in other._positions]
        return MonomialSet(kept, degree=self.degree, nvars=self.nvars)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, m):
        return m in self._positions

    def __getitem__(self, i):
        return self.members[i]

    def __eq__(self, other):
        return (
            isinstance(other, MonomialSet)
            and self.degree == other.degree
            and self.nvars == other.nvars
            and self.members == other.members
        )

    def __repr__(self):
        body = ", ".join(m.to_string() for m in self.members)
        return f"MonomialSet(deg={self.degree}, [{body}])"


def enumerate_monomials(n: int, degree: int) -> MonomialSet:
    """All monomials of the given degree in x0..xn, canonically ordered."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    count = math.comb(n + degree, degree)
    if count > MAX_ENUMERATION:
        raise CapacityError(f"{count} monomials exceed the enumeration budget")
    out = []

    def fill(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            fill(prefix + (e,), remaining - e, slots - 1)

    fill((), degree, n + 1)
    return MonomialSet([Monomial(e) for e in out])


def expand_plus(S: MonomialSet) -> MonomialSet:
    """All products x_j * m for m in S, deduplicated; degree rises by one."""
    found = {m.times_variable(j) for m in S for j in range(S.nvars)}
    return MonomialSet(found, degree=S.degree + 1, nvars=S.nvars)


class HomogeneousPolynomial:
    """Sparse homogeneous polynomial: monomial -> nonzero coefficient.

    Coefficients may be exact (int / Fraction) or floating complex; the
    two kinds are never mixed by the pipelines.  The zero polynomial has
    an empty term map and must state its degree explicitly.
    """

    __slots__ = ("degree", "terms")

    def __init__(self, terms, degree=None):
        items = terms.items() if hasattr(terms, "items") else terms
        kept = {}
        for m, c in items:
            if c == 0:
                continue
            if m in kept:
                raise ValueError(f"duplicate monomial {m} in term list")
            kept[m] = c
        if kept:
            degrees = {m.degree for m in kept}
            if len(degrees) > 1:
                raise ValueError(f"mixed degrees {sorted(degrees)} in one polynomial")
            nvars = {m.nvars for m in kept}
            if len(nvars) > 1:
                raise ValueError("mixed variable counts in one polynomial")
            d = degrees.pop()
            if degree is not None and degree != d:
                raise ValueError(f"declared degree {degree} but terms have {d}")
            self.degree = d
        else:
            if degree is None:
                raise ValueError("the zero polynomial needs an explicit degree")
            self.degree = int(degree)
        self.terms = kept

    def coefficient(self, m: Monomial):
        return self.terms.get(m, 0)

    def support(self) -> tuple[Monomial, ...]:
        return tuple(_canonical(self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def nvars(self):
        for m in self.terms:
            return m.nvars
        return None

    def times_variable(self, i: int) -> "HomogeneousPolynomial":
        return HomogeneousPolynomial(
            {m.times_variable(i): c for m, c in self.terms.items()},
            degree=self.degree + 1,
        )

    def evaluate(self, coords):
        total = 0
        for m, c in self.terms.items():
            total = total + c * m.evaluate(coords)
        return total

    def to_string(self, names=None) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in self.support():
            c = self.terms[m]
            mono = m.to_string(names)
            if c == 1 and m.degree > 0:
                text = mono
            elif isinstance(c, complex):
                text = f"({c})*{mono}"
            else:
                text = f"{c}*{mono}" if m.degree > 0 else f"{c}"
            parts.append(text)
        return " + ".join(parts)

    def __eq__(self, other):
        return (
            isinstance(other, HomogeneousPolynomial)
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __repr__(self):
        return f"HomogeneousPolynomial({self.to_string()})"


def coeffs(v: HomogeneousPolynomial, S: MonomialSet) -> list:
    """Coefficient vector of v aligned with S's member order.

    The support of v must be contained in S; the zero polynomial gives a
    zero vector against any set.
    """
    for m in v.terms:
        if m not in S:
            raise SupportError(f"monomial {m.to_string()} lies outside the target set")
    return [v.coefficient(m) for m in S]


class Complement:
    """Graded family N_0..N_s of coset-representative monomials.

    N_0 = {1} and each N_k is contained in the variable expansion of
    N_{k-1}, so every member factors through lower members down to 1.
    """

    __slots__ = ("levels",)

    def __init__(self, levels):
        levels = tuple(levels)
        if not levels:
            raise ValueError("a complement needs at least level 0")
        N0 = levels[0]
        if len(N0) != 1 or N0.degree != 0:
            raise ValueError("level 0 must be the single degree-0 monomial")
        for k, level in enumerate(levels):
            if level.degree != k:
                raise ValueError(f"level {k} has degree {level.degree}")
            if level.nvars != N0.nvars:
                raise ValueError("levels disagree on variable count")
            if k >= 1:
                grown = expand_plus(levels[k - 1])
                for m in level:
                    if m not in grown:
                        raise ValueError(
                            f"level {k} member {m.to_string()} does not factor "
                            f"through level {k - 1}"
                        )
        self.levels = levels

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    @property
    def nvars(self) -> int:
        return self.levels[0].nvars

    def level(self, k: int) -> MonomialSet:
        return self.levels[k]

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.levels)

    def __eq__(self, other):
        return isinstance(other, Complement) and self.levels == other.levels

    def __repr__(self):
        return f"Complement(sizes={self.sizes()})"


def border_monomials(C: Complement, k: int) -> MonomialSet:
    """Expansion of N_{k-1} minus N_k: the degree-k generator positions."""
    if not 1 <= k <= C.depth:
        raise ValueError(f"degree {k} outside 1..{C.depth}")
    return expand_plus(C.levels[k - 1]).difference(C.levels[k])


class GeneratorSet:
    """Per-degree lists of ideal generators.

    kind records how the polynomials were produced: "border" for border
    form (unit coefficient on the generator's own border monomial, rest
    supported on the complement), "intermediate" for raw factorization
    rows, "minimal" after redundancy removal.
    """

    __slots__ = ("by_degree", "kind")

    def __init__(self, by_degree, kind):
        if kind not in GENERATOR_KINDS:
            raise ValueError(f"kind must be one of {GENERATOR_KINDS}")
        stored = {}
        for k, polys in by_degree.items():
            k = int(k)
            if k < 1:
                raise ValueError("generator degrees start at 1")
            polys = tuple(polys)
            for p in polys:
                if p.degree != k:
                    raise ValueError(f"degree-{p.degree} polynomial filed under degree {k}")
                if p.is_zero():
                    raise ValueError("generator sets store no zero polynomials")
            stored[k] = polys
        self.by_degree = stored
        self.kind = kind

    def at(self, k: int) -> tuple[HomogeneousPolynomial, ...]:
        return self.by_degree.get(k, ())

    def counts(self) -> dict[int, int]:
        return {k: len(v) for k, v in sorted(self.by_degree.items())}

    def degrees(self) -> list[int]:
        return sorted(self.by_degree)

    def total(self) -> int:
        return sum(len(v) for v in self.by_degree.values())

    def __repr__(self):
        return f"GeneratorSet(kind={self.kind}, counts={self.counts()})"
