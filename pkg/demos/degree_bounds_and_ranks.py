"""Where the generators live, before computing anything.

Curve classes with understood embeddings (canonical models, complete
linear series, hyperelliptic models) come with degree bounds for the
ideal generators and Riemann-Roch formulas for the complement sizes.
Both plug straight into the pipeline: the bound says how many points to
sample, the sizes become imposed kernel ranks.
"""

from curveideal import (
    BivariatePolynomial,
    CurveProfile,
    Parametrization,
    border_basis_approx,
    class_divisor_degree,
    degree_bound,
    predicted_complement_size,
    required_points,
    sample_roots_of_unity,
)

profiles = [
    ("generic space sextic",
     CurveProfile(n=3, d=6)),
    ("canonical genus 5",
     CurveProfile(n=4, d=8, g=5, curve_class="canonical-nonhyperelliptic")),
    ("complete series, deg 8, genus 2",
     CurveProfile(n=6, d=8, g=2, curve_class="complete-series")),
    ("bicanonical genus 3",
     CurveProfile(n=5, d=8, g=3, curve_class="bicanonical")),
    ("tricanonical genus 2",
     CurveProfile(n=4, d=6, g=2, curve_class="tricanonical-g2")),
    ("hyperelliptic, deg 2g model",
     CurveProfile(n=2, d=4, g=2, curve_class="hyperelliptic-d2g")),
]
for label, p in profiles:
    b = degree_bound(p)
    shape = (f"degrees {sorted(b.value)}" if isinstance(b.value, tuple)
             else f"degree <= {b.value}")
    print(f"{label:32s} generators in {shape:18s} ({b.rule}); "
          f"{required_points(b.max_degree, p.d)} points suffice")

print()
for g in (4, 6, 8):
    p = CurveProfile(n=g - 1, d=2 * g - 2, g=g,
                     curve_class="canonical-nonhyperelliptic")
    degD = class_divisor_degree(p)
    n2 = predicted_complement_size(2, degD, g)
    n3 = predicted_complement_size(3, degD, g)
    print(f"canonical genus {g}: expected |N_2| = {n2}, |N_3| = {n3}")

# a rank prediction removes the spectral-gap decision from the float
# pipeline: the twisted cubic is a complete-series embedding, so the
# complement sizes 3k + 1 are known before any matrix is built
print()
curve = Parametrization([
    BivariatePolynomial([1, 0, 0, 0]),
    BivariatePolynomial([0, 1, 0, 0]),
    BivariatePolynomial([0, 0, 1, 0]),
    BivariatePolynomial([0, 0, 0, 1]),
])
profile = CurveProfile(n=3, d=3, g=0, curve_class="complete-series",
                       divisor_degree=3)
bound = degree_bound(profile)
points = sample_roots_of_unity(curve, required_points(bound.max_degree, 3))
ranks = {k: predicted_complement_size(k, class_divisor_degree(profile), 0)
         for k in range(1, bound.max_degree + 1)}
print("imposed ranks from the profile:", ranks)
run = border_basis_approx(points, bound.max_degree, ranks=ranks)
print("generators per degree:", run.counts())
print("rank decisions:", {k: r["mode"] for k, r in run.reports.items()})
