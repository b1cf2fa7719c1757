"""The twisted cubic over exact arithmetic.

Seven rational points on the twisted cubic determine its three
classical quadrics exactly: fraction-arithmetic echelon forms replace
the SVD, so no tolerance appears anywhere and every coefficient comes
out as a Fraction.
"""

from fractions import Fraction

from curveideal import (
    BivariatePolynomial,
    ExactMatrix,
    Parametrization,
    border_basis_with_complement,
    coeffs,
    enumerate_monomials,
    generators_at_degree,
    minimal_basis,
    points_oracle,
    rank,
    sample_exact_rational,
)

curve = Parametrization([
    BivariatePolynomial([1, 0, 0, 0]),
    BivariatePolynomial([0, 1, 0, 0]),
    BivariatePolynomial([0, 0, 1, 0]),
    BivariatePolynomial([0, 0, 0, 1]),
])
points = sample_exact_rational(curve, [Fraction(t) for t in range(7)])
sample = ", ".join(str(c) for c in points.points[2].coordinates)
print(f"{len(points)} exact points on the twisted cubic, e.g. ({sample})")

run = border_basis_with_complement(points_oracle(points), 3, 2)
print("complement sizes:", list(run.complement.sizes()))
print("border generators by degree:", run.counts())

report = minimal_basis(run.complement, run.generators)
quadrics = list(report.minimal.at(2))
print(f"{len(quadrics)} minimal quadrics:")
for q in quadrics:
    print("  ", q.to_string())

# the ideal is generated in degree 2, so one kernel computation on all
# ten quadratic monomials returns the same space in a single step
direct = generators_at_degree(points, 2)
S2 = enumerate_monomials(3, 2)
A = ExactMatrix([coeffs(v, S2) for v in quadrics], cols=len(S2))
B = ExactMatrix([coeffs(v, S2) for v in quadrics + direct], cols=len(S2))
print(f"single-kernel shortcut returns {len(direct)} quadrics,"
      f" same span: {rank(A) == rank(B)}")
