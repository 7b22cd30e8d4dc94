"""Independent brute-force oracles used to check the library's fast paths.

Everything here is deliberately naive: exhaustive enumeration, cofactor
expansion, basis-table quaternion products.  None of it shares code with
the implementation under test.
"""

from __future__ import annotations

from itertools import permutations

import numpy as np

from quathw import Quaternion

# multiplication table for the basis 1, i, j, k: entry (a, b) -> (sign, basis)
_BASIS_TABLE = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def table_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Quaternion product by expanding over the 16 basis products."""
    out = [0.0, 0.0, 0.0, 0.0]
    pc = p.components()
    qc = q.components()
    for a in range(4):
        for b in range(4):
            sign, basis = _BASIS_TABLE[(a, b)]
            out[basis] += sign * pc[a] * qc[b]
    return Quaternion(*out)


def exhaustive_min_assignment(lam, mu) -> tuple[float, tuple[int, ...]]:
    """Exact minimum matched cost and the lexicographically smallest optimizer."""
    lam = [complex(z) for z in lam]
    mu = [complex(z) for z in mu]
    n = len(lam)
    best_cost = None
    best_perm = None
    for perm in permutations(range(n)):  # permutations() yields in lex order
        cost = sum(abs(lam[i] - mu[perm[i]]) ** 2 for i in range(n))
        if best_cost is None or cost < best_cost:
            best_cost = cost
            best_perm = perm
    return float(best_cost), best_perm


def det_cofactor(a: np.ndarray) -> complex:
    """Determinant by cofactor expansion along the first row (orders <= 6)."""
    a = np.asarray(a, dtype=complex)
    n = a.shape[0]
    if n == 1:
        return complex(a[0, 0])
    total = 0.0 + 0.0j
    rest = a[1:, :]
    for j in range(n):
        minor = np.delete(rest, j, axis=1)
        total += ((-1) ** j) * a[0, j] * det_cofactor(minor)
    return complex(total)


def multiset_max_distance(a, b) -> float:
    """Optimal-matching max distance between two complex multisets."""
    a = [complex(z) for z in a]
    b = [complex(z) for z in b]
    assert len(a) == len(b)
    best = None
    for perm in permutations(range(len(a))):
        worst = max(abs(a[i] - b[perm[i]]) for i in range(len(a)))
        if best is None or worst < best:
            best = worst
    return float(best)
