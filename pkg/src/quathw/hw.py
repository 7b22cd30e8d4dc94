"""Optimal eigenvalue matching and Hoffman-Wielandt inequality checks.

The matching kernel is a Hungarian solver over the squared-modulus cost
matrix, refined to the lexicographically smallest optimal permutation.
``fold_conjugate_assignment`` implements the constructive rearrangement
that turns one permutation on 2n conjugate-duplicated values into two
permutations on n values without increasing the total cost.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import (
    LengthMismatchError,
    MalformedPairingError,
    NotDiagonalizableError,
    NotNormalError,
    ShapeMismatchError,
)
from .qmatrix import (
    QMatrix,
    condition_number,
    diagonalize,
    is_normal,
    standard_eigenvalues,
)

_INF = float("inf")


# -- assignment kernel -------------------------------------------------------


@dataclass(frozen=True)
class AssignmentResult:
    """Minimum-cost matching between two equal-length spectra.

    ``permutation[i] = j`` matches the i-th left value with the j-th right
    value (0-based).  ``cost`` is the recomputed sum of squared moduli and
    ``cost_matrix`` the full squared-distance matrix, kept for audit.
    """

    permutation: tuple[int, ...]
    cost: float
    cost_matrix: np.ndarray = field(repr=False, compare=False)

    def permutation_one_based(self) -> tuple[int, ...]:
        return tuple(j + 1 for j in self.permutation)


def _hungarian(cost: np.ndarray) -> tuple[list[int], float]:
    """Classic O(n^3) potentials algorithm; returns (row->col map, total)."""
    n = cost.shape[0]
    u = [0.0] * (n + 1)
    v = [0.0] * (n + 1)
    p = [0] * (n + 1)  # p[j]: row matched to column j (1-based, 0 = free)
    way = [0] * (n + 1)
    for i in range(1, n + 1):
        p[0] = i
        j0 = 0
        minv = [_INF] * (n + 1)
        used = [False] * (n + 1)
        while True:
            used[j0] = True
            i0 = p[j0]
            delta = _INF
            j1 = 0
            for j in range(1, n + 1):
                if used[j]:
                    continue
                cur = cost[i0 - 1][j - 1] - u[i0] - v[j]
                if cur < minv[j]:
                    minv[j] = cur
                    way[j] = j0
                if minv[j] < delta:
                    delta = minv[j]
                    j1 = j
            for j in range(n + 1):
                if used[j]:
                    u[p[j]] += delta
                    v[j] -= delta
                else:
                    minv[j] -= delta
            j0 = j1
            if p[j0] == 0:
                break
        while j0:
            j1 = way[j0]
            p[j0] = p[j1]
            j0 = j1
    perm = [0] * n
    for j in range(1, n + 1):
        perm[p[j] - 1] = j - 1
    total = float(sum(cost[i][perm[i]] for i in range(n)))
    return perm, total


def _lex_smallest_optimal(cost: np.ndarray, best: float, slack: float) -> list[int]:
    """Among cost-optimal assignments pick the lexicographically smallest."""
    n = cost.shape[0]
    avail = list(range(n))
    perm: list[int] = []
    fixed = 0.0
    for i in range(n):
        chosen = None
        for j in avail:
            rest = 0.0
            if i + 1 < n:
                others = [c for c in avail if c != j]
                sub = cost[np.ix_(range(i + 1, n), others)]
                _, rest = _hungarian(sub)
            if fixed + cost[i][j] + rest <= best + slack:
                chosen = j
                break
        if chosen is None:  # numerical safety net; cannot happen with exact ties
            chosen = avail[0]
        perm.append(chosen)
        fixed += cost[i][chosen]
        avail.remove(chosen)
    return perm


def assignment_cost(lam, mu, permutation) -> float:
    """Sum of |lam_i - mu_{perm(i)}|^2 for a given matching."""
    lam = [complex(z) for z in lam]
    mu = [complex(z) for z in mu]
    return float(sum(abs(l - mu[p]) ** 2 for l, p in zip(lam, permutation)))


def min_cost_assignment(
    lam, mu, tols: Tolerances = DEFAULT_TOLERANCES
) -> AssignmentResult:
    """Globally optimal matching of two spectra under squared-modulus cost.

    Ties between optimal permutations are broken toward the
    lexicographically smallest one.
    """
    lam = [complex(z) for z in lam]
    mu = [complex(z) for z in mu]
    if len(lam) != len(mu):
        raise LengthMismatchError(f"spectra have lengths {len(lam)} and {len(mu)}")
    if not lam:
        raise LengthMismatchError("spectra must be nonempty")
    # scalar expressions match any direct recomputation bit for bit, so the
    # optimum agrees exactly with exhaustive enumeration
    cost = np.array([[abs(l - m) ** 2 for m in mu] for l in lam], dtype=float)
    _, best = _hungarian(cost)
    slack = tols.tie * (1.0 + abs(best))
    perm = _lex_smallest_optimal(cost, best, slack)
    total = assignment_cost(lam, mu, perm)
    return AssignmentResult(permutation=tuple(perm), cost=total, cost_matrix=cost)


# -- constructive conjugate fold ---------------------------------------------


def fold_conjugate_assignment(
    mu2n, gamma2n, sigma
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Split a 2n-matching over conjugate-duplicated targets into two n-matchings.

    ``mu2n`` holds (mu_1..mu_n, conj(mu_1)..conj(mu_n)); ``sigma`` is a
    permutation of 0..2n-1 matching position i with target sigma[i] in the
    duplicated target list (delta_1..delta_n, conj(delta_1)..conj(delta_n));
    ``gamma2n[i]`` must equal the unconjugated target value delta_{t(i)}
    where t(i) = sigma[i] mod n.  Each target index then occurs exactly
    twice among t, and the iterative swap procedure rearranges the two
    halves so that each becomes a bijection on 0..n-1.  The total matched
    cost is preserved exactly; the cheaper permutation is returned first.
    """
    mu2n = [complex(z) for z in mu2n]
    gamma2n = [complex(z) for z in gamma2n]
    if len(mu2n) != len(gamma2n) or len(mu2n) % 2:
        raise LengthMismatchError("mu and gamma lists must share an even length")
    n = len(mu2n) // 2
    sigma = [int(s) for s in sigma]
    if sorted(sigma) != list(range(2 * n)):
        raise MalformedPairingError("sigma is not a permutation of 0..2n-1")

    targets = [s % n for s in sigma]
    # each target index occurs exactly twice, and gamma must be consistent
    canon: dict[int, complex] = {}
    for i, t in enumerate(targets):
        if t in canon:
            if abs(canon[t] - gamma2n[i]) > 1e-9 * (1.0 + abs(canon[t])):
                raise MalformedPairingError(
                    f"gamma values for target {t} disagree: {canon[t]} vs {gamma2n[i]}"
                )
        else:
            canon[t] = gamma2n[i]
    counts = [0] * n
    for t in targets:
        counts[t] += 1
    if any(c != 2 for c in counts):
        raise MalformedPairingError("each target value must occur exactly twice")

    g1 = targets[:n]
    g2 = targets[n:]
    for k in range(1, n):
        # make g1[0..k] duplicate-free, assuming g1[0..k-1] already is
        pos = k
        guard = 0
        while True:
            dup = next(
                (p for p in range(k + 1) if p != pos and g1[p] == g1[pos]), None
            )
            if dup is None:
                break
            g1[pos], g2[pos] = g2[pos], g1[pos]
            nxt = next(
                (p for p in range(k + 1) if p != pos and g1[p] == g1[pos]), None
            )
            if nxt is None:
                break
            pos = nxt
            guard += 1
            if guard > k + 2:  # the procedure provably stops within k+1 swaps
                raise MalformedPairingError("conjugate fold failed to terminate")

    if sorted(g1) != list(range(n)) or sorted(g2) != list(range(n)):
        raise MalformedPairingError("fold did not produce two bijections")

    mu_n = mu2n[:n]
    delta = [canon[t] for t in range(n)]
    c1 = assignment_cost(mu_n, delta, g1)
    c2 = assignment_cost(mu_n, delta, g2)
    if c2 < c1:
        g1, g2 = g2, g1
    return tuple(g1), tuple(g2)


# -- inequality reports -------------------------------------------------------


@dataclass(frozen=True)
class InequalityReport:
    """Outcome of one matched-eigenvalue perturbation inequality check."""

    kind: str                      # "hw" | "hw-type" | "hw-type-poly"
    lhs: float                     # optimally matched squared eigenvalue distance
    rhs: float                     # squared Frobenius bound, kappa-weighted if typed
    holds: bool
    slack: float                   # rhs - lhs
    permutation: tuple[int, ...]   # 0-based witness matching
    kappa: float | None = None
    theorem_class: str | None = None
    digests: dict[str, str] = field(default_factory=dict)

    def permutation_one_based(self) -> tuple[int, ...]:
        return tuple(j + 1 for j in self.permutation)


def _holds(lhs: float, rhs: float, tols: Tolerances) -> bool:
    return lhs <= rhs * (1.0 + tols.ineq_rel) + tols.ineq_abs


def hw_report(
    a: QMatrix,
    b: QMatrix,
    tols: Tolerances = DEFAULT_TOLERANCES,
    kind: str = "hw",
    rhs_factor: float = 1.0,
    kappa: float | None = None,
    theorem_class: str | None = None,
) -> InequalityReport:
    """Assemble the matched-cost vs Frobenius-bound report without preconditions.

    Used directly to *demonstrate* failures on inputs that do not satisfy a
    theorem's hypotheses (for example non-normal block companion matrices).
    """
    if a.shape != b.shape or not a.is_square:
        raise ShapeMismatchError(f"need equal square shapes, got {a.shape} and {b.shape}")
    lam = standard_eigenvalues(a, tols)
    mu = standard_eigenvalues(b, tols)
    match = min_cost_assignment(lam.values, mu.values, tols)
    rhs = rhs_factor * (a - b).frobenius_norm() ** 2
    return InequalityReport(
        kind=kind,
        lhs=match.cost,
        rhs=rhs,
        holds=_holds(match.cost, rhs, tols),
        slack=rhs - match.cost,
        permutation=match.permutation,
        kappa=kappa,
        theorem_class=theorem_class,
    )


def hw_check(
    a: QMatrix, b: QMatrix, tols: Tolerances = DEFAULT_TOLERANCES
) -> InequalityReport:
    """Hoffman-Wielandt check for two normal quaternion matrices.

    A False ``holds`` on inputs satisfying the precondition signals a
    numerical or implementation fault, never expected behavior.
    """
    if not is_normal(a, tols.predicate):
        raise NotNormalError("first operand is not normal at the configured tolerance")
    if not is_normal(b, tols.predicate):
        raise NotNormalError("second operand is not normal at the configured tolerance")
    return hw_report(a, b, tols, kind="hw")


def hw_type_check(
    a: QMatrix, b: QMatrix, tols: Tolerances = DEFAULT_TOLERANCES
) -> InequalityReport:
    """Hoffman-Wielandt-type check: diagonalizable A, arbitrary B.

    The bound is kappa(X)^2 ||A-B||_F^2 with X the computed diagonalizer.
    """
    if a.shape != b.shape or not a.is_square:
        raise ShapeMismatchError(f"need equal square shapes, got {a.shape} and {b.shape}")
    diag = diagonalize(a, tols)  # raises NotDiagonalizableError
    kappa = condition_number(diag.transform, tols)
    return hw_report(
        a, b, tols, kind="hw-type", rhs_factor=kappa * kappa, kappa=kappa
    )


# -- the built-in non-standard right-eigenvalue demonstration ----------------


@dataclass(frozen=True)
class NonStandardReport:
    """Standard eigenvalues satisfy the inequality; other right-eigenvalue
    representatives from the same similarity classes break it."""

    standard: InequalityReport
    nonstandard_costs: tuple[float, ...]  # matched cost per permutation of {0,1}
    nonstandard_min_cost: float
    frobenius_sq: float
    violates: bool


def non_standard_counterexample(
    tols: Tolerances = DEFAULT_TOLERANCES,
) -> NonStandardReport:
    """Reproduce the diag(1+i, 1) vs diag(i, 1) demonstration.

    With standard eigenvalues the matched cost equals ||A-B||_F^2 = 1.
    Choosing the similar-but-not-standard right eigenvalue 1-i for the first
    matrix makes every matching cost exceed the bound.
    """
    a = QMatrix.from_complex(np.diag([1 + 1j, 1.0]))
    b = QMatrix.from_complex(np.diag([1j, 1.0]))
    standard = hw_check(a, b, tols)
    mu = [1 - 1j, 1.0]          # right eigenvalues of A outside the upper half plane
    delta = [1j, 1.0]           # standard eigenvalues of B
    costs = (
        assignment_cost(mu, delta, (0, 1)),
        assignment_cost(mu, delta, (1, 0)),
    )
    fro_sq = (a - b).frobenius_norm() ** 2
    min_cost = min(costs)
    return NonStandardReport(
        standard=standard,
        nonstandard_costs=costs,
        nonstandard_min_cost=min_cost,
        frobenius_sq=fro_sq,
        violates=min_cost > fro_sq,
    )
