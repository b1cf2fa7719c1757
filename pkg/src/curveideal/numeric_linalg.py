"""Complex dense factorizations for the floating-point pipeline.

SVD provides null spaces with a defensible rank decision; QR with column
pivoting picks well-conditioned column subsets.  Both wrap LAPACK through
numpy/scipy and add the rank bookkeeping the callers need.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

DEFAULT_TOL = 1e-8


class IllConditionedError(ValueError):
    """A triangular block is too ill conditioned to invert reliably."""


class RankMismatchWarning(UserWarning):
    """An imposed rank disagrees with the spectral-gap rank."""


@dataclass(frozen=True)
class RankDecision:
    """How a numerical rank was chosen.

    singular_values holds the values the decision looked at (singular
    values for an SVD, |R| diagonal magnitudes for a pivoted QR), always
    nonnegative and nonincreasing up to roundoff.  gap_ratio is the
    relative gap that won when mode is "spectral-gap"; spectral_rank
    carries the spectral answer alongside an imposed rank so callers can
    cross-check the two.
    """

    rank: int
    mode: str
    singular_values: tuple[float, ...]
    gap_ratio: float | None = None
    spectral_rank: int | None = None


def _spectral_rank(values, tol) -> tuple[int, float | None]:
    """Largest-relative-gap rank rule.

    Candidate cut points r leave everything below tol * s_1 behind the
    cut; among them the one maximizing s_r / s_{r+1} wins.  Trailing
    values are floored at machine epsilon relative to s_1 so exact zeros
    cannot produce infinite ratios, and a cut whose last kept value is an
    exact zero is never considered.
    """
    values = [float(v) for v in values]
    if not values or values[0] <= 0.0:
        return 0, None
    top = values[0]
    floor = top * np.finfo(float).eps
    best_r, best_gap = 0, None
    for r in range(1, len(values) + 1):
        nxt = values[r] if r < len(values) else 0.0
        if nxt >= tol * top:
            continue
        if values[r - 1] <= 0.0:
            continue
        gap = values[r - 1] / max(nxt, floor)
        if best_gap is None or gap > best_gap:
            best_r, best_gap = r, gap
    return best_r, best_gap


def _validated(A) -> np.ndarray:
    M = np.asarray(A, dtype=complex)
    if M.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    if M.size and not np.all(np.isfinite(M)):
        raise ValueError("matrix entries must be finite")
    return M


def _check_tol(tol):
    if not 0.0 < tol < 1.0:
        raise ValueError("tol must lie strictly between 0 and 1")


def svd_nullspace(A, rank_hint: int | None = None, tol: float = DEFAULT_TOL):
    """Numerical rank and orthonormal kernel basis of A.

    Returns (RankDecision, K) where the columns of K are the last
    right singular vectors, an orthonormal basis of the numerical null
    space.  With rank_hint the rank is imposed and the spectral answer is
    recorded on the decision for cross-checking; otherwise the
    largest-relative-gap rule below tol decides.
    """
    M = _validated(A)
    _check_tol(tol)
    h, t = M.shape
    _, s, vh = np.linalg.svd(M, full_matrices=True)
    svals = tuple(float(x) for x in s)
    spectral, gap = _spectral_rank(svals, tol)
    if rank_hint is not None:
        if not 0 <= rank_hint <= min(h, t):
            raise ValueError(f"rank_hint {rank_hint} outside 0..{min(h, t)}")
        decision = RankDecision(int(rank_hint), "imposed", svals, None, spectral)
    else:
        decision = RankDecision(spectral, "spectral-gap", svals, gap, spectral)
    kernel = vh[decision.rank :].conj().T
    return decision, kernel


def qrp(A, tol: float = DEFAULT_TOL):
    """QR factorization with greedy max-column-norm pivoting.

    Returns (Q, R, perm, RankDecision) with A[:, perm] = Q @ R.  perm is
    the column-index permutation chosen by the factorization; the rank
    decision reads the diagonal magnitudes of R with the same
    largest-relative-gap rule the SVD uses.
    """
    M = _validated(A)
    _check_tol(tol)
    Q, R, piv = scipy.linalg.qr(M, pivoting=True)
    diag = tuple(float(x) for x in np.abs(np.diagonal(R)))
    r, gap = _spectral_rank(diag, tol)
    decision = RankDecision(r, "spectral-gap", diag, gap, r)
    return Q, R, tuple(int(p) for p in piv), decision


def border_form(R1, R, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Normalize a triangular row basis to (I | R1^-1 R2).

    R1 must be the leading square block of R.  Rows of the result are the
    original row span re-expressed so each row has a unit entry on its
    own leading column and zeros on the other leading columns.  Raises
    IllConditionedError when the diagonal of R1 spans a ratio beyond
    1/tol, instead of returning garbage.
    """
    R1 = np.asarray(R1, dtype=complex)
    R = np.asarray(R, dtype=complex)
    _check_tol(tol)
    r = R1.shape[0]
    if R1.shape != (r, r):
        raise ValueError("R1 must be square")
    if R.shape[0] != r or R.shape[1] < r:
        raise ValueError("R must extend R1 on the right")
    if not np.allclose(R[:, :r], R1):
        raise ValueError("R1 is not the leading block of R")
    d = np.abs(np.diagonal(R1))
    dmax = float(d.max()) if r else 0.0
    dmin = float(d.min()) if r else 0.0
    if r and (dmin == 0.0 or dmax / dmin >= 1.0 / tol):
        raise IllConditionedError(
            f"leading block diagonal spans {dmax:.3e}..{dmin:.3e}"
        )
    tail = scipy.linalg.solve_triangular(R1, R[:, r:]) if R.shape[1] > r else np.zeros((r, 0))
    return np.hstack([np.eye(r, dtype=complex), tail])
