"""Central tolerance registry.

Every numerical threshold used by the library lives here so that the CLI
can override any of them by name (``--tol NAME=VALUE``).
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    """Named tolerances threaded through the verification routines.

    Unless stated otherwise a tolerance is relative: residuals are compared
    against ``tol * (1 + scale)`` where scale is a norm of the input.
    """

    scalar: float = 1e-10            # quaternion scalar comparisons (absolute)
    predicate: float = 1e-8          # normal / unitary / Hermitian / psd residuals
    hermitian_input: float = 1e-10   # symmetry precondition of the Hermitian solver
    rank: float = 1e-10              # singular values below rank*sigma_max count as zero
    pivot: float = 1e-13             # LU pivot threshold relative to the Frobenius norm
    eig_residual: float = 1e-8       # max accepted eigenpair residual
    pairing: float = 1e-6            # conjugate-pair fold radius, relative to ||A||_F
    clamp_imag: float = 1e-10        # |Im| below this (times scale) snaps to the real axis
    diag_cluster: float = 1e-6       # eigenvalue clustering radius for multiplicity analysis
    diag_rank: float = 1e-8          # kernel cutoff inside the multiplicity analysis
    diag_verify: float = 1e-6        # ||X^-1 A X - D||_F / ||A||_F acceptance bound
    commute: float = 1e-8            # commutator residual, relative
    doubly_stochastic: float = 1e-10 # row/column sums and entry checks
    monic_residual: float = 1e-10    # ||B_i A_m - A_i||_F check after normalization
    similarity_residual: float = 1e-10  # permutation-similarity witness residual
    ineq_rel: float = 1e-9           # holds <=> lhs <= rhs*(1+ineq_rel) + ineq_abs
    ineq_abs: float = 1e-9
    strict_margin: float = 1e-9      # strictness margin for open-interval bounds
    tie: float = 1e-12               # assignment tie slack, relative to the optimum

    def replace(self, **overrides: float) -> "Tolerances":
        return dataclasses.replace(self, **overrides)

    @classmethod
    def names(cls) -> tuple[str, ...]:
        return tuple(f.name for f in dataclasses.fields(cls))


DEFAULT_TOLERANCES = Tolerances()
