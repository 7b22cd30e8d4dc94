"""Catalogue of built-in reference cases with known numerical outcomes.

Each case replays one worked example shipped as a fixture file and checks
their reference numbers: companion matrices, standard eigenvalues, Frobenius
distances, matched assignment costs, inequality verdicts, and eigenvalue
location bounds.  The ``paper-suite`` CLI command runs the whole catalogue.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from importlib import resources

from .config import DEFAULT_TOLERANCES, Tolerances
from .hw import hw_check, hw_report, min_cost_assignment, non_standard_counterexample
from .matio import load_document
from .qmatrix import QMatrix, is_unitary, spectral_norm, standard_eigenvalues
from .qpoly import (
    QMatrixPolynomial,
    bound_check_unitary,
    companion,
    hw_type_poly,
    standard_eigenvalues_poly,
)

_SQRT2 = math.sqrt(2.0)


@dataclass
class CaseResult:
    name: str
    passed: bool
    details: list[str] = field(default_factory=list)

    def check(self, label: str, ok: bool, observed: str = "") -> None:
        self.passed = self.passed and bool(ok)
        status = "ok" if ok else "FAIL"
        suffix = f" ({observed})" if observed else ""
        self.details.append(f"{status}: {label}{suffix}")


def fixture_path(name: str) -> str:
    return str(resources.files("quathw").joinpath("fixtures", name))


def _load_poly(name: str) -> QMatrixPolynomial:
    doc = load_document(fixture_path(name))
    assert isinstance(doc, QMatrixPolynomial)
    return doc


def _load_matrix(name: str) -> QMatrix:
    doc = load_document(fixture_path(name))
    assert isinstance(doc, QMatrix)
    return doc


def _spectra_close(values, expected, tol) -> bool:
    got = sorted(values, key=lambda z: (z.real, z.imag))
    want = sorted((complex(z) for z in expected), key=lambda z: (z.real, z.imag))
    return len(got) == len(want) and all(
        abs(g - w) <= tol for g, w in zip(got, want)
    )


def case_mixed_complex_diagonal(tols: Tolerances = DEFAULT_TOLERANCES) -> CaseResult:
    """diag(1+i, 1-i): complex eigenvalues are 1+i, 1-i but the standard
    eigenvalues over the quaternions are 1+i twice."""
    res = CaseResult("mixed-complex-diagonal", True)
    a = _load_matrix("mixed_complex_diagonal.json")
    spec = standard_eigenvalues(a, tols)
    res.check(
        "standard eigenvalues are {1+i, 1+i}",
        _spectra_close(spec.values, [1 + 1j, 1 + 1j], 1e-10),
        f"got {list(spec.values)}",
    )
    return res


def case_quaternion_unitary_diagonal(tols: Tolerances = DEFAULT_TOLERANCES) -> CaseResult:
    """diag(j, j) is unitary over the quaternions; standard eigenvalues {i, i}."""
    res = CaseResult("quaternion-unitary-diagonal", True)
    a = _load_matrix("unitary_j_diagonal.json")
    res.check("matrix is unitary", is_unitary(a, tols.predicate))
    res.check(
        "spectral norm is 1",
        abs(spectral_norm(a) - 1.0) <= 1e-10,
        f"{spectral_norm(a)!r}",
    )
    spec = standard_eigenvalues(a, tols)
    res.check(
        "standard eigenvalues are {i, i}",
        _spectra_close(spec.values, [1j, 1j], 1e-10),
        f"got {list(spec.values)}",
    )
    return res


def case_nonstandard_right_eigenvalues(tols: Tolerances = DEFAULT_TOLERANCES) -> CaseResult:
    """Standard eigenvalues satisfy the inequality with lhs = rhs = 1; the
    non-standard representatives 1-i, 1 break it for every matching."""
    res = CaseResult("nonstandard-right-eigenvalues", True)
    report = non_standard_counterexample(tols)
    res.check("standard check holds", report.standard.holds)
    res.check(
        "standard lhs = 1", abs(report.standard.lhs - 1.0) <= 1e-9, f"{report.standard.lhs!r}"
    )
    res.check(
        "standard rhs = 1", abs(report.standard.rhs - 1.0) <= 1e-9, f"{report.standard.rhs!r}"
    )
    costs = sorted(report.nonstandard_costs)
    res.check(
        "both non-standard matchings cost {5, 3}",
        abs(costs[0] - 3.0) <= 1e-9 and abs(costs[1] - 5.0) <= 1e-9,
        f"{report.nonstandard_costs}",
    )
    res.check(
        "non-standard minimum exceeds the bound",
        report.violates and report.nonstandard_min_cost > 1.0,
        f"min cost {report.nonstandard_min_cost!r} vs bound {report.frobenius_sq!r}",
    )
    return res


def case_linear_normal_pair(tols: Tolerances = DEFAULT_TOLERANCES) -> CaseResult:
    """Linear polynomials with normal coefficients whose companion matrices
    violate the plain inequality: matched cost 48 against a bound of 27."""
    res = CaseResult("linear-normal-pair", True)
    p = _load_poly("linear_normal_p.json")
    q = _load_poly("linear_normal_q.json")
    cp = companion(p, tols).matrix
    cq = companion(q, tols).matrix
    res.check(
        "companion of P is [[-1,-1],[1,-7]]",
        cp.allclose(QMatrix.from_real([[-1.0, -1.0], [1.0, -7.0]]), 1e-12),
    )
    res.check(
        "companion of Q is [[-2,-5],[4,-6]]",
        cq.allclose(QMatrix.from_real([[-2.0, -5.0], [4.0, -6.0]]), 1e-12),
    )
    dist = (cp - cq).frobenius_norm() ** 2
    res.check("||C_P - C_Q||_F^2 = 27", abs(dist - 27.0) <= 1e-9, f"{dist!r}")
    lam = standard_eigenvalues_poly(p, tols)
    mu = standard_eigenvalues_poly(q, tols)
    res.check(
        "eigenvalues of C_P are -4 +/- 2*sqrt(2)",
        _spectra_close(lam.values, [-4 - 2 * _SQRT2, -4 + 2 * _SQRT2], 1e-9),
        f"got {list(lam.values)}",
    )
    res.check(
        "eigenvalues of C_Q are -4+4i doubled",
        _spectra_close(mu.values, [-4 + 4j, -4 + 4j], 1e-9),
        f"got {list(mu.values)}",
    )
    match = min_cost_assignment(lam.values, mu.values, tols)
    res.check("minimum matched cost is 48", abs(match.cost - 48.0) <= 1e-9, f"{match.cost!r}")
    report = hw_report(cp, cq, tols)
    res.check("plain inequality is violated (48 > 27)", not report.holds)
    return res


def case_quadratic_unitary_pair(tols: Tolerances = DEFAULT_TOLERANCES) -> CaseResult:
    """Monic quadratics with unitary coefficients: bound 4, matched cost 4.5102."""
    res = CaseResult("quadratic-unitary-pair", True)
    p = _load_poly("quadratic_unitary_p.json")
    q = _load_poly("quadratic_unitary_q.json")
    cp = companion(p, tols).matrix
    cq = companion(q, tols).matrix
    dist = (cp - cq).frobenius_norm() ** 2
    res.check("||C_P - C_Q||_F^2 = 4", abs(dist - 4.0) <= 1e-9, f"{dist!r}")
    lam = standard_eigenvalues_poly(p, tols)
    expected_p = [1.6163, -0.4969 + 0.8643j, -0.4969 + 0.8643j, -0.6225]
    res.check(
        "eigenvalues of C_P match the reference list",
        _spectra_close(lam.values, expected_p, 1e-3),
        f"got {list(lam.values)}",
    )
    mu = standard_eigenvalues_poly(q, tols)
    res.check(
        "eigenvalues of C_Q are {1, 1, -1, -1}",
        _spectra_close(mu.values, [1.0, 1.0, -1.0, -1.0], 1e-3),
        f"got {list(mu.values)}",
    )
    match = min_cost_assignment(lam.values, mu.values, tols)
    res.check(
        "minimum matched cost is at least 4.5102",
        match.cost >= 4.5102 - 1e-3,
        f"{match.cost!r}",
    )
    report = hw_report(cp, cq, tols)
    res.check("plain inequality is violated (cost > 4)", not report.holds)
    return res


def case_unitary_bound_quadratic(tols: Tolerances = DEFAULT_TOLERANCES) -> CaseResult:
    """Eigenvalue moduli of the unitary-coefficient quadratic stay inside (1/2, 2)."""
    res = CaseResult("unitary-bound-quadratic", True)
    p = _load_poly("quadratic_unitary_p.json")
    report = bound_check_unitary(p, tols)
    res.check(
        "all moduli inside (1/2, 2)",
        report.holds,
        f"min {report.min_modulus:.6g}, max {report.max_modulus:.6g}",
    )
    res.check(
        "largest modulus is 1.6163",
        abs(report.max_modulus - 1.6163) <= 1e-3,
        f"{report.max_modulus!r}",
    )
    return res


def case_hw_type_linear_pair(tols: Tolerances = DEFAULT_TOLERANCES) -> CaseResult:
    """The kappa^2-weighted bound repairs the linear-pair violation."""
    res = CaseResult("hw-type-linear-pair", True)
    p = _load_poly("linear_normal_p.json")
    q = _load_poly("linear_normal_q.json")
    report = hw_type_poly(p, q, tols)
    res.check(
        "weighted inequality holds",
        report.holds,
        f"lhs {report.lhs:.6g} <= kappa^2 * 27 = {report.rhs:.6g} (kappa {report.kappa:.6g})",
    )
    res.check("lhs is still 48", abs(report.lhs - 48.0) <= 1e-9, f"{report.lhs!r}")
    return res


def case_normal_pair_equality(tols: Tolerances = DEFAULT_TOLERANCES) -> CaseResult:
    """The normal pair diag(1+i, 1), diag(i, 1) attains equality lhs = rhs = 1."""
    res = CaseResult("normal-pair-equality", True)
    a = _load_matrix("nonstandard_pair_a.json")
    b = _load_matrix("nonstandard_pair_b.json")
    report = hw_check(a, b, tols)
    res.check("inequality holds", report.holds)
    res.check("lhs = 1", abs(report.lhs - 1.0) <= 1e-9, f"{report.lhs!r}")
    res.check("rhs = 1", abs(report.rhs - 1.0) <= 1e-9, f"{report.rhs!r}")
    return res


ALL_CASES = (
    case_mixed_complex_diagonal,
    case_quaternion_unitary_diagonal,
    case_nonstandard_right_eigenvalues,
    case_normal_pair_equality,
    case_linear_normal_pair,
    case_quadratic_unitary_pair,
    case_unitary_bound_quadratic,
    case_hw_type_linear_pair,
)


def run_all(tols: Tolerances = DEFAULT_TOLERANCES) -> list[CaseResult]:
    results = []
    for case in ALL_CASES:
        try:
            results.append(case(tols))
        except Exception as exc:  # a crash counts as a failed case
            failed = CaseResult(case.__name__.removeprefix("case_").replace("_", "-"), False)
            failed.details.append(f"FAIL: raised {type(exc).__name__}: {exc}")
            results.append(failed)
    return results
