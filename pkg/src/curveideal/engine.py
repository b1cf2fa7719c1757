"""Degree-by-degree border basis construction for homogeneous ideals.

Each degree k expands the previous complement level, asks for a basis of
the new ideal elements supported on that expansion, and splits the
expansion into pivot monomials (which lead generators) and complement
monomials (which survive to the next level).  The exact backend does the
split by reduced row echelon form; the floating backend by SVD null
spaces followed by QR column pivoting, so the complement columns are the
well-conditioned ones.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .monomials import (
    Complement,
    GeneratorSet,
    HomogeneousPolynomial,
    Monomial,
    MonomialSet,
    coeffs,
    enumerate_monomials,
    expand_plus,
)
from .numeric_linalg import (
    DEFAULT_TOL,
    IllConditionedError,
    RankMismatchWarning,
    border_form,
    qrp,
    svd_nullspace,
)
from .points import PointSet, evaluation_matrix
from .rational_linalg import ExactMatrix, kernel_exact, rre


@dataclass(frozen=True)
class IdealOracle:
    """A degree-slice oracle for a proper homogeneous ideal.

    Calling it with a MonomialSet N returns a basis (possibly empty) of
    the ideal's intersection with the span of N.  provenance labels where
    the answers come from ("points-exact", "points-approx", "custom").
    """

    compute: Callable[[MonomialSet], list]
    n: int
    provenance: str = "custom"

    def __call__(self, N: MonomialSet):
        return self.compute(N)


def compute_basis_points(R: PointSet, N: MonomialSet, tol: float = DEFAULT_TOL):
    """Basis of the point set's vanishing ideal intersected with span(N).

    Exact point sets go through the rational kernel; approximate ones
    through the SVD null space.  Either way the result is a list of
    polynomials supported on N.
    """
    M = evaluation_matrix(R, N)
    if R.field_kind == "exact":
        return [_poly_from_vector(vec, N) for vec in kernel_exact(M)]
    decision, K = svd_nullspace(M, tol=tol)
    return [_poly_from_vector(K[:, i], N) for i in range(K.shape[1])]


def points_oracle(R: PointSet, tol: float = DEFAULT_TOL) -> IdealOracle:
    """Oracle wrapper around compute_basis_points for a fixed point set."""
    provenance = "points-exact" if R.field_kind == "exact" else "points-approx"
    return IdealOracle(lambda N: compute_basis_points(R, N, tol=tol), R.n, provenance)


def _poly_from_vector(vec, N: MonomialSet) -> HomogeneousPolynomial:
    terms = {}
    for m, c in zip(N, vec):
        if c != 0:
            terms[m] = c if isinstance(c, Fraction) else complex(c)
    return HomogeneousPolynomial(terms, degree=N.degree)


@dataclass
class BorderRun:
    """Everything one border basis run produced.

    reports maps each degree to a plain JSON-friendly dict of
    diagnostics (matrix sizes, rank decisions, chosen border monomials,
    residuals, warnings).
    """

    complement: Complement
    generators: GeneratorSet
    reports: dict[int, dict] = field(default_factory=dict)
    field_kind: str = "exact"

    def __post_init__(self):
        for k in range(1, self.complement.depth + 1):
            grown = expand_plus(self.complement.levels[k - 1])
            nk = len(self.complement.levels[k])
            bk = len(self.generators.at(k))
            if nk + bk != len(grown):
                raise ValueError(
                    f"degree {k}: complement {nk} + generators {bk} "
                    f"does not account for the {len(grown)} expanded monomials"
                )

    def counts(self) -> dict[int, int]:
        return {k: len(self.generators.at(k)) for k in range(1, self.complement.depth + 1)}

    @property
    def degenerate(self) -> bool:
        return bool(self.generators.at(1))

    @property
    def linear_relations(self) -> int:
        return len(self.generators.at(1))


def border_basis_with_complement(oracle: IdealOracle, n: int, s: int) -> BorderRun:
    """Exact border basis and complement up to degree s.

    The oracle must answer with exact rational coefficients.  Each degree
    row-reduces the returned basis against the expanded complement; pivot
    columns become border monomials (each generator is its pivot monomial
    plus a combination of complement monomials), the rest the next
    complement level.
    """
    if s < 1:
        raise ValueError("the degree bound s must be at least 1")
    if n < 0:
        raise ValueError("n must be nonnegative")
    unit = MonomialSet([Monomial((0,) * (n + 1))])
    constants = oracle(unit)
    if constants:
        raise ValueError("the ideal contains constants, so it is not proper")
    levels = [unit]
    by_degree: dict[int, list] = {}
    reports: dict[int, dict] = {}
    for k in range(1, s + 1):
        grown = expand_plus(levels[-1])
        t = len(grown)
        if t == 0:
            levels.append(grown)
            by_degree[k] = []
            reports[k] = {"monomials": 0, "kernel_dim": 0, "complement_size": 0,
                          "border_size": 0}
            continue
        basis = list(oracle(grown))
        q = len(basis)
        if q == 0:
            levels.append(grown)
            by_degree[k] = []
            reports[k] = {"monomials": t, "kernel_dim": 0, "complement_size": t,
                          "border_size": 0}
            continue
        A = ExactMatrix([coeffs(v, grown) for v in basis])
        res = rre(A)
        if len(res.pivot_columns) != q:
            raise ValueError(
                f"degree {k}: oracle returned {q} polynomials of rank "
                f"{len(res.pivot_columns)}"
            )
        pivset = set(res.pivot_columns)
        level = MonomialSet(
            [grown[j] for j in range(t) if j not in pivset], degree=k, nvars=n + 1
        )
        polys = []
        for i, pc in enumerate(res.pivot_columns):
            terms = {grown[pc]: Fraction(1)}
            for j in range(t):
                if j in pivset:
                    continue
                c = res.matrix.entries[i][j]
                if c != 0:
                    terms[grown[j]] = c
            polys.append(HomogeneousPolynomial(terms, degree=k))
        levels.append(level)
        by_degree[k] = polys
        reports[k] = {
            "monomials": t,
            "kernel_dim": q,
            "complement_size": len(level),
            "border_size": q,
            "border_monomials": [list(grown[j].exponents) for j in res.pivot_columns],
        }
    run = BorderRun(Complement(levels), GeneratorSet(by_degree, "border"),
                    reports, "exact")
    return run


def border_basis_approx(
    R: PointSet,
    s: int,
    ranks: dict[int, int] | None = None,
    tol: float = DEFAULT_TOL,
    form: str = "border",
) -> BorderRun:
    """Floating-point border basis and complement up to degree s.

    ranks imposes the evaluation-matrix rank per degree (the complement
    size predicted by geometry); degrees absent from the map fall back to
    the spectral-gap rule.  form selects whether generators are converted
    to border form ("border") or left as factorization rows
    ("intermediate"); an ill-conditioned conversion downgrades the whole
    run to intermediate with a warning rather than aborting.
    """
    if R.field_kind != "approximate":
        raise ValueError("border_basis_approx needs an approximate point set")
    if s < 1:
        raise ValueError("the degree bound s must be at least 1")
    if form not in ("border", "intermediate"):
        raise ValueError("form must be 'border' or 'intermediate'")
    ranks = dict(ranks or {})
    n = R.n
    levels = [MonomialSet([Monomial((0,) * (n + 1))])]
    by_degree: dict[int, list] = {}
    reports: dict[int, dict] = {}
    kind = form
    for k in range(1, s + 1):
        grown = expand_plus(levels[-1])
        t = len(grown)
        M = evaluation_matrix(R, grown)
        decision, K = svd_nullspace(M, rank_hint=ranks.get(k), tol=tol)
        r, nullity = decision.rank, t - decision.rank
        notes = []
        if decision.mode == "imposed" and decision.spectral_rank != decision.rank:
            msg = (
                f"degree {k}: imposed rank {decision.rank} disagrees with "
                f"spectral-gap rank {decision.spectral_rank}"
            )
            warnings.warn(msg, RankMismatchWarning, stacklevel=2)
            notes.append(msg)
        report = {
            "monomials": t,
            "rank": r,
            "nullity": nullity,
            "mode": decision.mode,
            "gap_ratio": decision.gap_ratio,
            "spectral_rank": decision.spectral_rank,
        }
        if nullity == 0:
            levels.append(grown)
            by_degree[k] = []
            report.update(border_monomials=[], max_residual=0.0, warnings=notes)
            reports[k] = report
            continue
        S = K.T
        _, Rf, perm, _ = qrp(S, tol=tol)
        border_idx = perm[:nullity]
        compl_idx = perm[nullity:]
        level = MonomialSet([grown[j] for j in compl_idx], degree=k, nvars=n + 1)
        border_monos = [grown[j] for j in border_idx]
        polys = None
        if kind == "border":
            try:
                F = border_form(Rf[:, :nullity], Rf, tol=tol)
            except IllConditionedError as exc:
                msg = f"degree {k}: border form unavailable ({exc}); keeping row basis"
                warnings.warn(msg, UserWarning, stacklevel=2)
                notes.append(msg)
                kind = "intermediate"
            else:
                polys = []
                for i in range(nullity):
                    terms = {border_monos[i]: complex(1.0)}
                    for jdx, j in enumerate(compl_idx):
                        c = F[i, nullity + jdx]
                        if c != 0:
                            terms[grown[j]] = complex(c)
                    polys.append(HomogeneousPolynomial(terms, degree=k))
        if polys is None:
            polys = []
            for i in range(nullity):
                terms = {}
                for jj in range(t):
                    c = Rf[i, jj]
                    if c != 0:
                        terms[grown[perm[jj]]] = complex(c)
                polys.append(HomogeneousPolynomial(terms, degree=k))
        vecs = np.array(
            [[complex(p.coefficient(m)) for m in grown] for p in polys], dtype=complex
        ).T
        report.update(
            border_monomials=[list(m.exponents) for m in border_monos],
            max_residual=float(np.max(np.abs(M @ vecs))) if polys else 0.0,
            warnings=notes,
        )
        levels.append(level)
        by_degree[k] = polys
        reports[k] = report
    run = BorderRun(Complement(levels), GeneratorSet(by_degree, kind),
                    reports, "approximate")
    return run


def generators_at_degree(
    R: PointSet, k: int, rank: int | None = None, tol: float = DEFAULT_TOL
):
    """Kernel of the full degree-k evaluation matrix, as polynomials.

    A single factorization shortcut for ideals known to be generated in
    one degree: when the expected rank (the degree-k complement size) is
    supplied, one imposed-rank SVD replaces the whole degree ladder.
    """
    if k < 1:
        raise ValueError("the degree must be at least 1")
    N = enumerate_monomials(R.n, k)
    M = evaluation_matrix(R, N)
    if R.field_kind == "exact":
        return [_poly_from_vector(vec, N) for vec in kernel_exact(M)]
    decision, K = svd_nullspace(M, rank_hint=rank, tol=tol)
    return [_poly_from_vector(K[:, i], N) for i in range(K.shape[1])]
