"""Redundancy removal: minimal generating sets from degree-local data.

A degree-k generator is redundant exactly when it lies in the span of
the variable multiples of the degree-(k-1) basis plus the other degree-k
generators.  All such relations have degree-at-most-one coefficients, so
minimization reduces to one kernel computation per degree: build the
matrix whose columns are the multiples and the degree-k basis over the
monomial blocks S_1 (multiples-only support) and S_2 (the degree-k
border monomials), compute its kernel (the rows supported on the
complement level N_k contribute nothing to it and are dropped), project
kernel vectors onto the degree-k coordinates, and read redundant indices
off the pivots of a reduction.

Three routes compute the same thing: a general exact route, an exact or
floating fast path exploiting that border bases make most of the matrix
an identity or a 0/1 pattern, and a floating route using SVD kernels
with the rank imposed by the dimension identity dim Ker = l - s_1.
"""

from __future__ import annotations

import warnings as _warnings
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .monomials import (
    Complement,
    GeneratorSet,
    MonomialSet,
    SupportError,
    border_monomials,
    expand_plus,
)
from .numeric_linalg import DEFAULT_TOL, RankMismatchWarning, qrp, svd_nullspace
from .rational_linalg import (
    ExactMatrix,
    column_reduce_to_echelon,
    kernel_exact,
    rre,
)

#: A redundancy rank decision whose spectral gap falls below this ratio
#: is reported as weakly separated.
MIN_GAP_CONFIDENCE = 10.0

#: Border-form alignment tolerance for floating inputs: coefficients on
#: the border block must match the 0/1 unit pattern this closely.
BORDER_UNIT_TOL = 1e-9


@dataclass
class MinimizationReport:
    """Outcome of a minimization pass.

    removed_per_degree holds the discarded input indices per degree;
    kernel_dims the dimension of the overlap between the span of the
    lower-degree multiples and the span of the degree-k basis, which in
    exact arithmetic equals the number of removals at that degree.
    """

    minimal: GeneratorSet
    removed_per_degree: dict[int, tuple[int, ...]]
    kernel_dims: dict[int, int]
    warnings: list[str] = field(default_factory=list)


def _field_kind(V: GeneratorSet) -> str:
    kinds = set()
    for k in V.degrees():
        for p in V.at(k):
            for c in p.terms.values():
                kinds.add("exact" if isinstance(c, (int, Fraction)) else "approximate")
    if len(kinds) > 1:
        raise ValueError("generator set mixes exact and floating coefficients")
    return kinds.pop() if kinds else "exact"


def _check_sizes(C: Complement, V: GeneratorSet):
    for k in V.degrees():
        if k > C.depth:
            raise ValueError(f"generators at degree {k} exceed complement depth {C.depth}")
    for k in range(1, C.depth + 1):
        expected = len(border_monomials(C, k))
        if len(V.at(k)) != expected:
            raise ValueError(
                f"degree {k}: {len(V.at(k))} generators but the complement "
                f"implies {expected}"
            )


def _blocks(C: Complement, k: int):
    """Monomial blocks for degree k >= 2: rows S_1 + S_2, droppable N_k."""
    S2 = border_monomials(C, k)
    prev_plus = expand_plus(C.levels[k - 1])
    S1 = expand_plus(border_monomials(C, k - 1)).difference(prev_plus)
    rows = MonomialSet(list(S1) + list(S2), degree=k, nvars=C.nvars)
    return rows, C.levels[k], len(S1), len(S2)


def _exact_column(p, rows: MonomialSet, stray: MonomialSet):
    col = [Fraction(0)] * len(rows)
    for m, c in p.terms.items():
        if m in rows:
            col[rows.index(m)] = c
        elif m not in stray:
            raise SupportError(
                f"monomial {m.to_string()} escapes the degree-{rows.degree} blocks"
            )
    return col


def _complex_column(p, rows: MonomialSet, stray: MonomialSet):
    col = np.zeros(len(rows), dtype=complex)
    for m, c in p.terms.items():
        if m in rows:
            col[rows.index(m)] = complex(c)
        elif m not in stray:
            raise SupportError(
                f"monomial {m.to_string()} escapes the degree-{rows.degree} blocks"
            )
    return col


def _trivial_degree(Vk):
    return tuple(Vk), (), 0


def minimal_basis(C: Complement, V: GeneratorSet) -> MinimizationReport:
    """Minimal generating set from a complement and exact degree bases.

    V_k must be a basis of the ideal's degree-k elements supported on the
    expansion of N_{k-1}; coefficients must be exact.  Degree 1 is always
    kept whole (there is nothing below it to reduce against).
    """
    if _field_kind(V) != "exact":
        raise ValueError("minimal_basis needs exact coefficients; see minimal_basis_approx")
    _check_sizes(C, V)
    nvars = C.nvars
    minimal: dict[int, tuple] = {}
    removed: dict[int, tuple[int, ...]] = {}
    kdims: dict[int, int] = {}
    for k in range(1, C.depth + 1):
        Vk = V.at(k)
        prev = V.at(k - 1) if k >= 2 else ()
        if not prev or not Vk:
            minimal[k], removed[k], kdims[k] = _trivial_degree(Vk)
            continue
        rows, stray, s1, s2 = _blocks(C, k)
        products = [v.times_variable(j) for v in prev for j in range(nvars)]
        l = len(products)
        cols = [_exact_column(p, rows, stray) for p in products]
        cols += [_exact_column(v, rows, stray) for v in Vk]
        U = ExactMatrix.from_columns(cols, rows=len(rows))
        kernel = kernel_exact(U)
        if len(kernel) != l - s1:
            raise ValueError(
                f"degree {k}: kernel dimension {len(kernel)} instead of "
                f"{l - s1}; generators are inconsistent with the complement"
            )
        if not kernel:
            minimal[k], removed[k], kdims[k] = _trivial_degree(Vk)
            continue
        MK = ExactMatrix([vec[l:] for vec in kernel], cols=s2)
        pivots = rre(MK).pivot_columns
        pivset = set(pivots)
        minimal[k] = tuple(p for i, p in enumerate(Vk) if i not in pivset)
        removed[k] = pivots
        kdims[k] = len(pivots)
    return MinimizationReport(GeneratorSet(minimal, "minimal"), removed, kdims)


def minimal_basis_approx(
    C: Complement, V: GeneratorSet, tol: float = DEFAULT_TOL
) -> MinimizationReport:
    """Floating-point minimization via SVD kernels and pivoted QR.

    The kernel of each degree's relation matrix is computed with its rank
    imposed to s_1 + s_2 (the dimension identity guarantees it), then a
    pivoted QR of the projected kernel selects well-conditioned redundant
    columns.  Weakly separated rank decisions are recorded as warnings on
    the report, and disagreement between the imposed and spectral ranks
    raises a RankMismatchWarning as well.
    """
    _check_sizes(C, V)
    nvars = C.nvars
    minimal: dict[int, tuple] = {}
    removed: dict[int, tuple[int, ...]] = {}
    kdims: dict[int, int] = {}
    notes: list[str] = []
    for k in range(1, C.depth + 1):
        Vk = V.at(k)
        prev = V.at(k - 1) if k >= 2 else ()
        if not prev or not Vk:
            minimal[k], removed[k], kdims[k] = _trivial_degree(Vk)
            continue
        rows, stray, s1, s2 = _blocks(C, k)
        products = [v.times_variable(j) for v in prev for j in range(nvars)]
        l = len(products)
        cols = [_complex_column(p, rows, stray) for p in products]
        cols += [_complex_column(v, rows, stray) for v in Vk]
        U = np.array(cols, dtype=complex).T
        decision, K = svd_nullspace(U, rank_hint=s1 + s2, tol=tol)
        if decision.spectral_rank != decision.rank:
            msg = (
                f"degree {k}: imposed relation rank {decision.rank} disagrees "
                f"with spectral-gap rank {decision.spectral_rank}"
            )
            _warnings.warn(msg, RankMismatchWarning, stacklevel=2)
            notes.append(msg)
        if K.shape[1] == 0:
            minimal[k], removed[k], kdims[k] = _trivial_degree(Vk)
            continue
        MK = K.T[:, l:]
        _, _, perm, dec = qrp(MK, tol=tol)
        r = dec.rank
        if 0 < r < len(dec.singular_values) and (
            dec.gap_ratio is None or dec.gap_ratio < MIN_GAP_CONFIDENCE
        ):
            notes.append(
                f"degree {k}: redundancy rank {r} decided on a weak spectral "
                f"gap ({dec.gap_ratio})"
            )
        pivset = set(perm[:r])
        minimal[k] = tuple(p for i, p in enumerate(Vk) if i not in pivset)
        removed[k] = tuple(sorted(pivset))
        kdims[k] = r
    return MinimizationReport(GeneratorSet(minimal, "minimal"), removed, kdims, notes)


class _StructureError(Exception):
    """Border-form preconditions fail for the structured fast path."""


def _alignment(C: Complement, B: GeneratorSet, field_kind: str):
    """Map each generator to its border monomial, checking border form.

    Returns {k: [index into border_monomials(C, k) for each input]}.
    Exact inputs must match the unit pattern exactly; floating ones to
    within BORDER_UNIT_TOL.
    """
    atol = 0 if field_kind == "exact" else BORDER_UNIT_TOL
    rows_per_degree = {}
    for k in range(1, C.depth + 1):
        D = border_monomials(C, k)
        level = C.levels[k]
        seen = set()
        assigned = []
        for i, b in enumerate(B.at(k)):
            unit = None
            for m, c in b.terms.items():
                if m in D:
                    if abs(c - 1) <= atol:
                        if unit is not None:
                            raise _StructureError(
                                f"degree {k}, generator {i}: two unit border coefficients"
                            )
                        unit = m
                    elif abs(c) > atol:
                        raise _StructureError(
                            f"degree {k}, generator {i}: border coefficient "
                            f"{c} is neither 0 nor 1"
                        )
                elif m not in level:
                    raise _StructureError(
                        f"degree {k}, generator {i}: support escapes the "
                        f"border and complement blocks"
                    )
            if unit is None:
                raise _StructureError(
                    f"degree {k}, generator {i}: no unit border coefficient"
                )
            if unit in seen:
                raise _StructureError(
                    f"degree {k}: border monomial {unit.to_string()} claimed twice"
                )
            seen.add(unit)
            assigned.append(D.index(unit))
        rows_per_degree[k] = assigned
    return rows_per_degree


def _complex_column_pivot_rows(A: np.ndarray, tol: float) -> tuple[int, ...]:
    """Pivot rows of a floating column echelon reduction.

    Rows are scanned top-down so the pivot row SET matches the exact
    echelon scan; within a row the largest remaining entry is eliminated
    for stability.  Entries below tol relative to the largest initial
    entry count as zero.
    """
    W = np.array(A, dtype=complex, copy=True)
    nr, nc = W.shape
    if nr == 0 or nc == 0:
        return ()
    thresh = tol * max(1.0, float(np.max(np.abs(W))))
    active = list(range(nc))
    pivot_rows = []
    for row in range(nr):
        if not active:
            break
        j = active[int(np.argmax(np.abs(W[row, active])))]
        val = W[row, j]
        if abs(val) <= thresh:
            continue
        col = W[:, j] / val
        for jj in active:
            if jj != j:
                W[:, jj] = W[:, jj] - W[row, jj] * col
        active.remove(j)
        pivot_rows.append(row)
    return tuple(pivot_rows)


def minimal_basis_border(
    C: Complement, B: GeneratorSet, tol: float = DEFAULT_TOL
) -> MinimizationReport:
    """Structured minimization for border bases.

    Border form makes the degree-k block of the relation matrix an
    identity and the S_1 block of the multiples 0/1-valued (a multiple
    x_j*b meets S_1 only through x_j times b's border monomial, with
    coefficient exactly 1), so the projected kernel basis P_2 comes from
    plain column subtractions instead of a kernel computation.  The
    pivot rows of its column echelon form, taken in input order, are the
    redundant generators; the kept set equals the general route's.

    Exact inputs violating border form raise ValueError; floating inputs
    fall back to minimal_basis_approx with a warning on the report.
    """
    if B.kind != "border":
        raise ValueError(f"minimal_basis_border needs kind='border', got '{B.kind}'")
    _check_sizes(C, B)
    field_kind = _field_kind(B)
    try:
        alignment = _alignment(C, B, field_kind)
    except _StructureError as exc:
        if field_kind == "exact":
            raise ValueError(f"input is not in border form: {exc}") from None
        msg = f"border structure not usable ({exc}); using the general route"
        _warnings.warn(msg, UserWarning, stacklevel=2)
        report = minimal_basis_approx(C, B, tol=tol)
        report.warnings.insert(0, msg)
        return report
    exact = field_kind == "exact"
    nvars = C.nvars
    minimal: dict[int, tuple] = {}
    removed: dict[int, tuple[int, ...]] = {}
    kdims: dict[int, int] = {}
    for k in range(1, C.depth + 1):
        Bk = B.at(k)
        prev = B.at(k - 1) if k >= 2 else ()
        if not prev or not Bk:
            minimal[k], removed[k], kdims[k] = _trivial_degree(Bk)
            continue
        D = border_monomials(C, k)
        prev_border = border_monomials(C, k - 1)
        prev_plus = expand_plus(C.levels[k - 1])
        free_cols = []
        groups: dict = {}
        for idx, b in enumerate(prev):
            m_b = prev_border[alignment[k - 1][idx]]
            for j in range(nvars):
                p = b.times_variable(j)
                col = [p.coefficient(m) for m in D]
                mu = m_b.times_variable(j)
                if mu in prev_plus:
                    free_cols.append(col)
                else:
                    groups.setdefault(mu, []).append(col)
        columns = list(free_cols)
        for cols in groups.values():
            rep = cols[0]
            for other in cols[1:]:
                columns.append([a - b for a, b in zip(other, rep)])
        if not columns:
            minimal[k], removed[k], kdims[k] = _trivial_degree(Bk)
            continue
        # rows to input order so pivot indices name input generators
        order = alignment[k]
        if exact:
            P2 = ExactMatrix.from_columns(columns, rows=len(D))
            permuted = ExactMatrix([P2.row(r) for r in order], cols=P2.cols)
            _, pivot_rows = column_reduce_to_echelon(permuted)
        else:
            P2 = np.array(columns, dtype=complex).T
            pivot_rows = _complex_column_pivot_rows(P2[order, :], tol)
        pivset = set(pivot_rows)
        minimal[k] = tuple(p for i, p in enumerate(Bk) if i not in pivset)
        removed[k] = tuple(pivot_rows)
        kdims[k] = len(pivot_rows)
    return MinimizationReport(GeneratorSet(minimal, "minimal"), removed, kdims)
