"""Shared fixtures: the two reference curves and their pipeline runs.

The expensive runs (31-point sextic, exact arithmetic ladder) are session
scoped so every module checks the same objects.  Acceptance tests that
measure runtime build their own fresh runs.
"""

from fractions import Fraction

import pytest

from curveideal import (
    BivariatePolynomial,
    Parametrization,
    border_basis_approx,
    border_basis_with_complement,
    minimal_basis_border,
    points_oracle,
    sample_exact_rational,
    sample_roots_of_unity,
)

# Degree-6 genus-3 space curve used throughout as the floating-point
# reference instance; coordinates are (x, y, z, w) and each component
# lists coefficients of s^(6-i) t^i.
SEXTIC_COMPONENTS = (
    (0, 0, 3, -9, -3, 12, 6),
    (-3, 18, -27, -12, 33, 6, -6),
    (1, -6, 13, -16, 9, 14, -6),
    (0, 0, -2, 8, -14, 20, -6),
)


@pytest.fixture(scope="session")
def sextic():
    return Parametrization([BivariatePolynomial(list(c)) for c in SEXTIC_COMPONENTS])


@pytest.fixture(scope="session")
def twisted_cubic():
    return Parametrization([
        BivariatePolynomial([1, 0, 0, 0]),
        BivariatePolynomial([0, 1, 0, 0]),
        BivariatePolynomial([0, 0, 1, 0]),
        BivariatePolynomial([0, 0, 0, 1]),
    ])


@pytest.fixture(scope="session")
def sextic_points(sextic):
    return sample_roots_of_unity(sextic, 31)


@pytest.fixture(scope="session")
def sextic_run(sextic_points):
    return border_basis_approx(sextic_points, 5)


@pytest.fixture(scope="session")
def sextic_minimal(sextic_run):
    return minimal_basis_border(sextic_run.complement, sextic_run.generators)


@pytest.fixture(scope="session")
def sextic_exact_points(sextic):
    # 31 rational parameter values; small magnitudes keep fractions tame
    return sample_exact_rational(sextic, [Fraction(t) for t in range(-15, 16)])


@pytest.fixture(scope="session")
def sextic_exact_run(sextic_exact_points):
    return border_basis_with_complement(points_oracle(sextic_exact_points), 3, 5)


@pytest.fixture(scope="session")
def twisted_points(twisted_cubic):
    return sample_exact_rational(twisted_cubic, [Fraction(t) for t in range(7)])


@pytest.fixture(scope="session")
def twisted_run(twisted_points):
    return border_basis_with_complement(points_oracle(twisted_points), 3, 2)


# One line per end-to-end acceptance check, printed after the run.
ACCEPTANCE = (
    ("test_c1_sextic_golden_counts_and_minimal_cubics",
     "criterion 1: sextic golden run (counts, 4 minimal cubics, residuals, runtime)"),
    ("test_c2_sextic_rational_recovery",
     "criterion 2: sextic rational coefficient recovery and substitution check"),
    ("test_c3_degree_bound_table",
     "criterion 3: degree bound rules"),
    ("test_c4_predicted_complement_sizes",
     "criterion 4: Riemann-Roch complement size predictions"),
    ("test_c5_twisted_cubic_exact_quadrics",
     "criterion 5: twisted cubic exact run recovers the three quadrics"),
    ("test_c6_property_suites",
     "criterion 6: randomized structural properties and runtime growth"),
    ("test_c7_imposed_rank_shortcut",
     "criterion 7: single-SVD imposed-rank shortcut matches the pipeline"),
)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = {}
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            if getattr(rep, "when", "call") != "call" and key != "error":
                continue
            name = rep.nodeid.rsplit("::", 1)[-1]
            for test_name, _ in ACCEPTANCE:
                if name == test_name:
                    results[test_name] = "PASS" if key == "passed" else "FAIL"
    if not results:
        return
    terminalreporter.write_sep("-", "acceptance summary")
    for test_name, label in ACCEPTANCE:
        terminalreporter.write_line(f"{results.get(test_name, 'NOT RUN'):7s} {label}")
