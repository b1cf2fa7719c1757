"""Shared independent checks used across the test modules.

Everything here recomputes its answer from first principles (stacked-rank
span tests, full evaluation matrices, brute-force monomial expansion) so
the tests never trust the code path they are checking.
"""

import random
from fractions import Fraction

import numpy as np

from curveideal import (
    Monomial,
    PointSet,
    border_monomials,
    coeffs,
    enumerate_monomials,
    evaluation_matrix,
    kernel_exact,
    rank,
)
from curveideal.rational_linalg import ExactMatrix


def coefficient_rows(polys, S):
    """Exact coefficient matrix of polys over the monomial set S."""
    return ExactMatrix([coeffs(v, S) for v in polys], cols=len(S))


def exact_span_equal(polys_a, polys_b, S):
    """Row spans over S agree: rank A = rank B = rank of the stack."""
    A = coefficient_rows(polys_a, S)
    B = coefficient_rows(polys_b, S)
    stacked = ExactMatrix(list(A.entries) + list(B.entries), cols=len(S))
    return rank(A) == rank(B) == rank(stacked)


def numeric_rows(polys, S):
    return np.array([[complex(v.coefficient(m)) for m in S] for v in polys])


def principal_gap(polys_a, polys_b, S):
    """Spectral-norm distance between the row spans of two generator lists.

    Zero iff the spans coincide; requires both lists to be full rank of
    the same dimension, which is asserted.
    """
    A = numeric_rows(polys_a, S)
    B = numeric_rows(polys_b, S)
    ra = np.linalg.matrix_rank(A, tol=1e-10)
    rb = np.linalg.matrix_rank(B, tol=1e-10)
    assert ra == len(polys_a) and rb == len(polys_b) and ra == rb
    Qa = np.linalg.svd(A, full_matrices=False)[2]
    Qb = np.linalg.svd(B, full_matrices=False)[2]
    return np.linalg.norm(Qb - (Qb @ Qa.conj().T) @ Qa, 2)


def brute_force_expansion(S):
    """All products x_j * m as an exponent-tuple set, computed directly."""
    out = set()
    for m in S:
        for j in range(m.nvars):
            e = list(m.exponents)
            e[j] += 1
            out.add(tuple(e))
    return out


def random_exact_points(seed, n, count):
    """Pairwise non-proportional small integer points in P^n."""
    rng = random.Random(seed)
    seen = []
    while len(seen) < count:
        c = [Fraction(rng.randint(-5, 5)) for _ in range(n + 1)]
        if all(v == 0 for v in c):
            continue
        cand = _normalize_direction(c)
        if cand not in seen:
            seen.append(cand)
    return PointSet.exact([list(c) for c in seen])


def _normalize_direction(c):
    lead = next(v for v in c if v != 0)
    return tuple(v / lead for v in c)


def ideal_dimension(R, k):
    """dim of the degree-k piece of the vanishing ideal, from the full
    evaluation matrix on all monomials of degree k."""
    n = len(R.points[0].coordinates) - 1
    T = enumerate_monomials(n, k)
    return len(kernel_exact(evaluation_matrix(R, T)))


def check_complement_connected(C):
    """Every complement member above degree 0 divides down into the
    previous level: N_k subset of N_{k-1}+, recomputed by brute force."""
    assert [m.exponents for m in C.level(0)] == [(0,) * C.nvars]
    for k in range(1, C.depth + 1):
        grown = brute_force_expansion(C.level(k - 1))
        for m in C.level(k):
            assert m.exponents in grown


def check_direct_sum(run, R):
    """|N_k| + dim I_k equals the number of degree-k monomials."""
    n = run.complement.nvars - 1
    sizes = run.complement.sizes()
    for k in range(1, run.complement.depth + 1):
        total = len(enumerate_monomials(n, k))
        assert sizes[k] + ideal_dimension(R, k) == total


def check_vanishing(run, R, tol=0.0):
    for k, polys in sorted(run.generators.by_degree.items()):
        for v in polys:
            for p in R.points:
                val = v.evaluate(p.coordinates)
                if tol == 0.0:
                    assert val == 0
                else:
                    assert abs(val) <= tol


def border_set(run, k):
    return {m.exponents for m in border_monomials(run.complement, k)}


def exhaustive_best_rational(x, max_denominator):
    """Closest p/q to x over every q up to max_denominator, by scan."""
    best = None
    best_err = None
    for q in range(1, max_denominator + 1):
        p = round(x * q)
        err = abs(x - Fraction(p, q))
        if best_err is None or err < best_err:
            best, best_err = Fraction(p, q), err
    return best, best_err
