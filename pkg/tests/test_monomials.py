"""Monomial, monomial set, polynomial, and graded container behavior."""

import math
from fractions import Fraction

import pytest

from curveideal import (
    CapacityError,
    Complement,
    GeneratorSet,
    HomogeneousPolynomial,
    Monomial,
    MonomialSet,
    SupportError,
    border_monomials,
    coeffs,
    enumerate_monomials,
    expand_plus,
)
from oracles import brute_force_expansion

F = Fraction


def M(*exponents):
    return Monomial(tuple(exponents))


def test_monomials_are_interned_per_exponent_tuple():
    assert M(1, 2, 0) is M(1, 2, 0)
    assert M(1, 2, 0) is not M(1, 0, 2)


def test_monomial_rejects_negative_exponents():
    with pytest.raises(ValueError):
        M(1, -1)


def test_monomial_degree_and_nvars():
    m = M(2, 0, 1)
    assert m.degree == 3
    assert m.nvars == 3


def test_times_variable_bumps_one_exponent():
    assert M(1, 0).times_variable(1) is M(1, 1)
    with pytest.raises(IndexError):
        M(1, 0).times_variable(2)


def test_monomial_evaluate_exact_and_complex():
    m = M(2, 1)
    assert m.evaluate((F(1, 2), F(3))) == F(3, 4)
    assert m.evaluate((2 + 0j, 1j)) == 4j


def test_monomial_to_string():
    assert M(2, 0, 1).to_string(("x", "y", "z")) == "x^2*z"
    assert M(0, 0, 0).to_string(("x", "y", "z")) == "1"


def test_enumerate_monomials_small_counts():
    assert [m.exponents for m in enumerate_monomials(1, 2)] == [(2, 0), (1, 1), (0, 2)]
    assert len(enumerate_monomials(3, 2)) == 10
    assert len(enumerate_monomials(3, 3)) == 20


@pytest.mark.parametrize("n,k", [(1, 3), (2, 4), (3, 5), (4, 3)])
def test_enumerate_count_is_binomial(n, k):
    assert len(enumerate_monomials(n, k)) == math.comb(n + k, k)


def test_enumerate_is_grlex_descending():
    S = enumerate_monomials(2, 3)
    exps = [m.exponents for m in S.members]
    assert exps == sorted(exps, reverse=True)
    assert exps[0] == (3, 0, 0)
    assert exps[-1] == (0, 0, 3)


def test_enumerate_refuses_oversized_sets():
    # C(124, 4) is just above the enumeration budget
    with pytest.raises(CapacityError):
        enumerate_monomials(120, 4)


def test_expand_plus_of_unit_set():
    one = MonomialSet([M(0, 0)])
    assert [m.exponents for m in expand_plus(one)] == [(1, 0), (0, 1)]


def test_expand_plus_dedupes_shared_products():
    S = MonomialSet([M(1, 0, 0), M(0, 1, 0)])
    grown = expand_plus(S)
    assert len(grown) == 5
    assert {m.exponents for m in grown} == brute_force_expansion(S)


@pytest.mark.parametrize("n,k", [(1, 1), (2, 2), (3, 3)])
def test_expand_plus_of_full_degree_is_next_degree(n, k):
    assert expand_plus(enumerate_monomials(n, k)).members == enumerate_monomials(n, k + 1).members


def test_expand_plus_matches_brute_force_on_sparse_set():
    S = MonomialSet([M(2, 0, 1), M(1, 1, 1), M(0, 3, 0)])
    assert {m.exponents for m in expand_plus(S)} == brute_force_expansion(S)


def test_monomial_set_rejects_mixed_degrees():
    with pytest.raises(ValueError):
        MonomialSet([M(1, 0), M(2, 0)])


def test_monomial_set_rejects_mixed_variable_counts():
    with pytest.raises(ValueError):
        MonomialSet([M(1, 0), M(1, 0, 0)])


def test_empty_monomial_set_needs_shape():
    with pytest.raises(ValueError):
        MonomialSet([])
    S = MonomialSet([], degree=2, nvars=3)
    assert len(S) == 0 and S.degree == 2 and S.nvars == 3


def test_monomial_set_dedupes_and_indexes():
    S = MonomialSet([M(1, 1), M(2, 0), M(1, 1)])
    assert [m.exponents for m in S.members] == [(2, 0), (1, 1)]
    assert S.index(M(1, 1)) == 1
    assert M(2, 0) in S and M(0, 2) not in S
    assert S[0] is M(2, 0)


def test_monomial_set_difference():
    S = enumerate_monomials(1, 2)
    D = S.difference(MonomialSet([M(1, 1)]))
    assert [m.exponents for m in D.members] == [(2, 0), (0, 2)]
    with pytest.raises(ValueError):
        S.difference(MonomialSet([M(1, 0)]))


def test_polynomial_drops_zero_terms_and_dedupes():
    v = HomogeneousPolynomial({M(1, 1): F(2), M(2, 0): F(0)})
    assert v.support() == (M(1, 1),)
    assert v.coefficient(M(2, 0)) == 0
    assert not v.is_zero()


def test_zero_polynomial_needs_degree():
    with pytest.raises(ValueError):
        HomogeneousPolynomial({})
    z = HomogeneousPolynomial({}, degree=3)
    assert z.is_zero()


def test_polynomial_rejects_mixed_degrees():
    with pytest.raises(ValueError):
        HomogeneousPolynomial({M(1, 0): F(1), M(2, 0): F(1)})


def test_polynomial_times_variable_and_evaluate():
    v = HomogeneousPolynomial({M(1, 0): F(1), M(0, 1): F(-2)})
    shifted = v.times_variable(0)
    assert shifted.coefficient(M(2, 0)) == 1
    assert shifted.coefficient(M(1, 1)) == -2
    assert v.evaluate((F(3), F(1))) == 1


def test_polynomial_to_string():
    v = HomogeneousPolynomial({M(1, 0, 1): F(1), M(0, 2, 0): F(-1)})
    assert v.to_string(("x", "y", "z")) == "x*z + -1*y^2"
    assert HomogeneousPolynomial({}, degree=2).to_string() == "0"


def test_coeffs_reads_off_coordinates():
    S = MonomialSet([M(1, 0), M(0, 1)])
    v = HomogeneousPolynomial({M(1, 0): F(1), M(0, 1): F(2)})
    assert coeffs(v, S) == [F(1), F(2)]


def test_coeffs_of_zero_polynomial():
    S = enumerate_monomials(1, 2)
    z = HomogeneousPolynomial({}, degree=2)
    assert coeffs(z, S) == [F(0)] * 3


def test_coeffs_rejects_support_outside_the_set():
    S = MonomialSet([M(1, 0)])
    v = HomogeneousPolynomial({M(0, 1): F(1)})
    with pytest.raises(SupportError):
        coeffs(v, S)


def test_coeffs_is_linear():
    S = enumerate_monomials(2, 2)
    a = HomogeneousPolynomial({M(2, 0, 0): F(1, 3), M(1, 1, 0): F(-2)})
    b = HomogeneousPolynomial({M(1, 1, 0): F(5), M(0, 0, 2): F(7, 2)})
    summed = dict(a.terms)
    for m, c in b.terms.items():
        summed[m] = summed.get(m, F(0)) + c
    lhs = coeffs(HomogeneousPolynomial(summed), S)
    rhs = [x + y for x, y in zip(coeffs(a, S), coeffs(b, S))]
    assert lhs == rhs


def test_complement_levels_and_sizes():
    C = Complement([
        MonomialSet([M(0, 0, 0)]),
        MonomialSet([M(1, 0, 0)]),
        MonomialSet([M(2, 0, 0)]),
    ])
    assert C.depth == 2
    assert C.nvars == 3
    assert C.sizes() == (1, 1, 1)
    assert C.level(1).members == (M(1, 0, 0),)


def test_complement_requires_unit_at_level_zero():
    with pytest.raises(ValueError):
        Complement([MonomialSet([M(1, 0)], degree=1)])


def test_complement_rejects_disconnected_levels():
    # x1^2 is not a variable multiple of x0
    with pytest.raises(ValueError):
        Complement([
            MonomialSet([M(0, 0)]),
            MonomialSet([M(1, 0)]),
            MonomialSet([M(0, 2)]),
        ])


def test_border_monomials_of_point_complement():
    C = Complement([
        MonomialSet([M(0, 0, 0)]),
        MonomialSet([M(1, 0, 0), M(0, 1, 0)]),
    ])
    B = border_monomials(C, 1)
    assert [m.exponents for m in B.members] == [(0, 0, 1)]


def test_border_monomials_empty_when_complement_keeps_everything():
    C = Complement([
        MonomialSet([M(0, 0)]),
        enumerate_monomials(1, 1),
    ])
    assert len(border_monomials(C, 1)) == 0


def test_border_monomials_degree_must_be_in_range():
    C = Complement([MonomialSet([M(0, 0)])])
    with pytest.raises(ValueError):
        border_monomials(C, 0)
    with pytest.raises(ValueError):
        border_monomials(C, 1)


def test_border_union_complement_is_the_expansion():
    C = Complement([
        MonomialSet([M(0, 0, 0)]),
        MonomialSet([M(1, 0, 0), M(0, 1, 0)]),
        MonomialSet([M(1, 1, 0)]),
    ])
    grown = expand_plus(C.level(1))
    B = border_monomials(C, 2)
    assert set(B) | set(C.level(2)) == set(grown)
    assert set(B) & set(C.level(2)) == set()


def test_generator_set_counts_and_access():
    v = HomogeneousPolynomial({M(1, 0): F(1)})
    G = GeneratorSet({1: [v]}, "border")
    assert G.counts() == {1: 1}
    assert G.at(1) == (v,)
    assert G.at(5) == ()
    assert G.total() == 1
    assert G.degrees() == [1]


def test_generator_set_validates_kind_and_filing():
    v = HomogeneousPolynomial({M(1, 0): F(1)})
    with pytest.raises(ValueError):
        GeneratorSet({1: [v]}, "fancy")
    with pytest.raises(ValueError):
        GeneratorSet({2: [v]}, "border")
    with pytest.raises(ValueError):
        GeneratorSet({1: [HomogeneousPolynomial({}, degree=1)]}, "border")
