"""Dense quaternion matrices and the complex adjoint embedding.

A quaternion matrix A is stored through its unique complex split
A = A1 + A2*j.  The complex adjoint of an n x m matrix is the
2n x 2m complex block matrix

    chi(A) = [[ A1,        A2      ],
              [-conj(A2),  conj(A1)]]

which is a ring homomorphism: chi(A B) = chi(A) chi(B), chi(A*) = chi(A)*,
chi of the n x n identity is the 2n x 2n identity.  Norm bridge:
||chi(A)||_F^2 = 2 ||A||_F^2 and ||chi(A)||_2 = ||A||_2.  (Some sources
state the Frobenius relation without the squares; the squared form is the
correct one, since each quaternion entry contributes its squared modulus
twice to chi.)

Standard eigenvalues of a square A are the n eigenvalues of chi(A) folded
into conjugate pairs, one representative per pair in the closed upper half
plane.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import clinalg
from .config import DEFAULT_TOLERANCES, Tolerances
from .errors import (
    NotDiagonalizableError,
    PairingFailureError,
    ShapeMismatchError,
    SingularMatrixError,
)
from .quaternion import Quaternion

_TINY = np.finfo(float).tiny


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class QMatrix:
    """Immutable dense quaternion matrix backed by its complex split."""

    __slots__ = ("c1", "c2")

    def __init__(self, c1: np.ndarray, c2: np.ndarray | None = None):
        c1 = np.array(c1, dtype=complex)
        if c1.ndim != 2:
            raise ShapeMismatchError(f"expected a 2-d array, got ndim {c1.ndim}")
        if c2 is None:
            c2 = np.zeros_like(c1)
        else:
            c2 = np.array(c2, dtype=complex)
        if c2.shape != c1.shape:
            raise ShapeMismatchError(f"split parts differ in shape: {c1.shape} vs {c2.shape}")
        self.c1 = _freeze(c1)
        self.c2 = _freeze(c2)

    # -- constructors -------------------------------------------------

    @classmethod
    def from_entries(cls, rows) -> "QMatrix":
        """Build from nested sequences of Quaternion or 4-sequences [a0,a1,a2,a3]."""
        data = []
        width = None
        for row in rows:
            parsed = []
            for entry in row:
                if isinstance(entry, Quaternion):
                    q = entry
                elif isinstance(entry, (int, float)):
                    q = Quaternion.from_real(entry)
                elif isinstance(entry, complex):
                    q = Quaternion.from_complex(entry)
                else:
                    a0, a1, a2, a3 = (float(x) for x in entry)
                    q = Quaternion(a0, a1, a2, a3)
                parsed.append(q)
            if width is None:
                width = len(parsed)
            elif len(parsed) != width:
                raise ShapeMismatchError("ragged rows in matrix entries")
            data.append(parsed)
        if not data or width == 0:
            raise ShapeMismatchError("matrix must have at least one row and one column")
        c1 = np.array([[q.complex_pair()[0] for q in row] for row in data])
        c2 = np.array([[q.complex_pair()[1] for q in row] for row in data])
        return cls(c1, c2)

    @classmethod
    def from_real(cls, a) -> "QMatrix":
        a = np.asarray(a, dtype=float)
        return cls(a.astype(complex))

    @classmethod
    def from_complex(cls, a) -> "QMatrix":
        return cls(np.asarray(a, dtype=complex))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "QMatrix":
        cols = rows if cols is None else cols
        return cls(np.zeros((rows, cols), dtype=complex))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(np.eye(n, dtype=complex))

    @classmethod
    def diagonal(cls, values) -> "QMatrix":
        """Diagonal matrix from quaternion or complex scalars."""
        z1, z2 = [], []
        for v in values:
            if isinstance(v, Quaternion):
                p1, p2 = v.complex_pair()
            else:
                p1, p2 = complex(v), 0.0
            z1.append(p1)
            z2.append(p2)
        return cls(np.diag(np.array(z1, dtype=complex)), np.diag(np.array(z2, dtype=complex)))

    @classmethod
    def block(cls, grid) -> "QMatrix":
        """Assemble from a 2-d grid of QMatrix blocks."""
        return cls(
            np.block([[b.c1 for b in row] for row in grid]),
            np.block([[b.c2 for b in row] for row in grid]),
        )

    # -- shape and access ----------------------------------------------

    @property
    def rows(self) -> int:
        return self.c1.shape[0]

    @property
    def cols(self) -> int:
        return self.c1.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.c1.shape

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, key) -> Quaternion:
        i, j = key
        return Quaternion.from_complex_pair(self.c1[i, j], self.c2[i, j])

    def to_entries(self) -> list[list[list[float]]]:
        """Nested [a0, a1, a2, a3] lists, the textual encoding of the matrix."""
        return [
            [
                [self.c1[i, j].real, self.c1[i, j].imag, self.c2[i, j].real, self.c2[i, j].imag]
                for j in range(self.cols)
            ]
            for i in range(self.rows)
        ]

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: "QMatrix") -> "QMatrix":
        if not isinstance(other, QMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeMismatchError(f"cannot add shapes {self.shape} and {other.shape}")
        return QMatrix(self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        if not isinstance(other, QMatrix):
            return NotImplemented
        if self.shape != other.shape:
            raise ShapeMismatchError(f"cannot subtract shapes {self.shape} and {other.shape}")
        return QMatrix(self.c1 - other.c1, self.c2 - other.c2)

    def __neg__(self) -> "QMatrix":
        return QMatrix(-self.c1, -self.c2)

    def __mul__(self, scalar) -> "QMatrix":
        if isinstance(scalar, (int, float)):
            return QMatrix(self.c1 * scalar, self.c2 * scalar)
        return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if not isinstance(other, QMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeMismatchError(f"cannot multiply shapes {self.shape} and {other.shape}")
        # (A1 + A2 j)(B1 + B2 j) = (A1 B1 - A2 conj(B2)) + (A1 B2 + A2 conj(B1)) j
        return QMatrix(
            self.c1 @ other.c1 - self.c2 @ other.c2.conj(),
            self.c1 @ other.c2 + self.c2 @ other.c1.conj(),
        )

    def scale_left(self, q: Quaternion) -> "QMatrix":
        """q * A, entrywise left multiplication by a quaternion scalar."""
        q1, q2 = q.complex_pair()
        return QMatrix(q1 * self.c1 - q2 * self.c2.conj(), q1 * self.c2 + q2 * self.c1.conj())

    def scale_right(self, q: Quaternion) -> "QMatrix":
        """A * q, entrywise right multiplication by a quaternion scalar."""
        q1, q2 = q.complex_pair()
        return QMatrix(self.c1 * q1 - self.c2 * np.conj(q2), self.c1 * q2 + self.c2 * np.conj(q1))

    def conjugate_transpose(self) -> "QMatrix":
        """A* with entries conj(a_ji)."""
        return QMatrix(self.c1.conj().T, -self.c2.T)

    @property
    def h(self) -> "QMatrix":
        return self.conjugate_transpose()

    # -- norms and comparison --------------------------------------------

    def frobenius_norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.c1) ** 2) + np.sum(np.abs(self.c2) ** 2)))

    def allclose(self, other: "QMatrix", tol: float = 1e-10) -> bool:
        if self.shape != other.shape:
            return False
        return bool(
            np.allclose(self.c1, other.c1, rtol=0.0, atol=tol)
            and np.allclose(self.c2, other.c2, rtol=0.0, atol=tol)
        )

    def __repr__(self) -> str:
        return f"QMatrix(shape={self.shape})"


# -- adjoint embedding ----------------------------------------------------


def adjoint(a: QMatrix) -> np.ndarray:
    """The complex adjoint matrix, exact block assembly (no arithmetic)."""
    return np.block([[a.c1, a.c2], [-a.c2.conj(), a.c1.conj()]])


def from_adjoint(m: np.ndarray, tol: float = 1e-10) -> QMatrix:
    """Invert the adjoint embedding, validating the block structure."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] % 2 or m.shape[1] % 2:
        raise ShapeMismatchError(f"adjoint image must have even dimensions, got {m.shape}")
    n, p = m.shape[0] // 2, m.shape[1] // 2
    m11, m12 = m[:n, :p], m[:n, p:]
    m21, m22 = m[n:, :p], m[n:, p:]
    scale = 1.0 + float(np.linalg.norm(m, "fro"))
    defect = max(
        float(np.linalg.norm(m22 - m11.conj(), "fro")),
        float(np.linalg.norm(m21 + m12.conj(), "fro")),
    )
    if defect > tol * scale:
        raise ShapeMismatchError(
            f"matrix is not in the image of the adjoint embedding (defect {defect:.3e})"
        )
    return QMatrix(m11, m12)


def frobenius_norm(a: QMatrix) -> float:
    return a.frobenius_norm()


def spectral_norm(a: QMatrix) -> float:
    """||A||_2 computed as the spectral norm of the complex adjoint."""
    return clinalg.spectral_norm(adjoint(a))


def inverse(a: QMatrix, tols: Tolerances = DEFAULT_TOLERANCES) -> QMatrix:
    """Inverse through the adjoint embedding: chi(A^-1) = chi(A)^-1."""
    if not a.is_square:
        raise ShapeMismatchError("only square matrices have inverses")
    return from_adjoint(clinalg.inverse(adjoint(a), pivot_tol=tols.pivot), tol=1e-8)


def condition_number(x: QMatrix, tols: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Spectral condition number ||X||_2 ||X^-1||_2 (1 exactly for unitary X)."""
    return spectral_norm(x) * spectral_norm(inverse(x, tols))


# -- structural predicates --------------------------------------------------


def _square(a: QMatrix) -> QMatrix:
    if not a.is_square:
        raise ShapeMismatchError("operation requires a square matrix")
    return a


def is_hermitian(a: QMatrix, tol: float = 1e-8) -> bool:
    _square(a)
    return (a - a.h).frobenius_norm() <= tol * (1.0 + a.frobenius_norm())


def is_normal(a: QMatrix, tol: float = 1e-8) -> bool:
    _square(a)
    ah = a.h
    return (a @ ah - ah @ a).frobenius_norm() <= tol * (1.0 + a.frobenius_norm() ** 2)


def is_unitary(a: QMatrix, tol: float = 1e-8) -> bool:
    _square(a)
    eye = QMatrix.identity(a.rows)
    scale = 1.0 + a.frobenius_norm() ** 2
    return (a @ a.h - eye).frobenius_norm() <= tol * scale and (
        a.h @ a - eye
    ).frobenius_norm() <= tol * scale


def is_positive_semidefinite(a: QMatrix, tol: float = 1e-8) -> bool:
    _square(a)
    if not is_hermitian(a, tol):
        return False
    w = clinalg.hermitian_eigenvalues(adjoint(a), sym_tol=max(tol, 1e-10))
    return bool(w[0] >= -tol * (1.0 + a.frobenius_norm()))

def is_positive_definite(a: QMatrix, tol: float = 1e-8) -> bool:
    _square(a)
    if not is_hermitian(a, tol):
        return False
    w = clinalg.hermitian_eigenvalues(adjoint(a), sym_tol=max(tol, 1e-10))
    return bool(w[0] > tol * (1.0 + a.frobenius_norm()))


def is_invertible(a: QMatrix, tol: float = 1e-10) -> bool:
    _square(a)
    return clinalg.rank(adjoint(a), tol=tol) == 2 * a.rows


def is_diagonal(a: QMatrix, tol: float = 1e-10) -> bool:
    _square(a)
    off1 = a.c1 - np.diag(np.diag(a.c1))
    off2 = a.c2 - np.diag(np.diag(a.c2))
    scale = 1.0 + a.frobenius_norm()
    return float(np.linalg.norm(off1) + np.linalg.norm(off2)) <= tol * scale


# -- standard eigenvalues ----------------------------------------------------


@dataclass(frozen=True)
class StandardSpectrum:
    """The n standard eigenvalues in the closed upper half plane.

    ``values`` are sorted lexicographically by (real, imag);
    ``pairing_residual`` is the largest distance between a spectrum value of
    the adjoint and the conjugate of its matched partner.
    """

    values: tuple[complex, ...]
    pairing_residual: float

    def __len__(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=complex)


def _fold_conjugate_spectrum(
    w: np.ndarray, scale: float, tols: Tolerances
) -> tuple[list[complex], float]:
    """Pair the 2n eigenvalues of an adjoint with their conjugates.

    Greedy nearest-conjugate matching, most-imaginary value first; each
    pair contributes one representative with nonnegative imaginary part.
    """
    if len(w) % 2:
        raise PairingFailureError("adjoint spectrum has odd length")
    clamp = tols.clamp_imag * max(1.0, scale)
    values = list(w)
    alive = list(range(len(values)))
    reps: list[complex] = []
    residual = 0.0
    while alive:
        a = max(alive, key=lambda idx: (values[idx].imag, -idx))
        alive.remove(a)
        target = values[a].conjugate()
        b = min(alive, key=lambda idx: (abs(values[idx] - target), idx))
        alive.remove(b)
        residual = max(residual, abs(values[b] - target))
        avg = 0.5 * (values[a] + values[b].conjugate())
        im = abs(avg.imag)
        reps.append(complex(avg.real, 0.0 if im <= clamp else im))
    return reps, residual


def standard_eigenvalues(a: QMatrix, tols: Tolerances = DEFAULT_TOLERANCES) -> StandardSpectrum:
    """Standard eigenvalues of a square quaternion matrix.

    Computes the spectrum of the complex adjoint and folds it into conjugate
    pairs.  Raises PairingFailureError when the fold exceeds the pairing
    tolerance, which signals eigensolver inaccuracy rather than bad input.
    """
    _square(a)
    fro = a.frobenius_norm()
    dec = clinalg.eigenvalues(adjoint(a))
    reps, residual = _fold_conjugate_spectrum(dec.values, fro, tols)
    threshold = tols.pairing * max(fro, _TINY)
    if residual > threshold:
        raise PairingFailureError(
            f"conjugate pairing residual {residual:.3e} exceeds {threshold:.3e}"
        )
    reps.sort(key=lambda z: (z.real, z.imag))
    return StandardSpectrum(values=tuple(reps), pairing_residual=float(residual))


# -- diagonalization ----------------------------------------------------------


@dataclass(frozen=True)
class Diagonalization:
    """Result of diagonalizing a quaternion matrix.

    ``transform`` is X with X^-1 A X = diag(values); ``values`` are standard
    eigenvalues aligned with the columns of X and sorted lexicographically.
    ``residual`` is ||X^-1 A X - diag(values)||_F / max(||A||_F, tiny).
    """

    transform: QMatrix
    values: tuple[complex, ...]
    residual: float


def _cluster_indices(values: np.ndarray, radius: float) -> list[list[int]]:
    """Group eigenvalues whose pairwise chains stay within ``radius``."""
    n = len(values)
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(values[i] - values[j]) <= radius:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _kernel_basis(
    shifted: np.ndarray, want: int, spread: float, rank_tol: float, floor: float
) -> np.ndarray:
    """Orthonormal basis of the numerical kernel, failing when it is smaller
    than ``want`` (deficient geometric multiplicity).

    The cutoff keeps a floor proportional to the unshifted matrix scale:
    when the shift lands exactly on a scalar matrix, the shifted matrix is
    pure rounding noise and a cutoff relative to its own largest singular
    value would undercount the kernel.
    """
    u, s, vh = np.linalg.svd(shifted)
    sigma_max = s[0] if s.size else 0.0
    cutoff = max(2.0 * spread, rank_tol * sigma_max, rank_tol * floor, _TINY)
    dim = int(np.count_nonzero(s <= cutoff))
    if dim < want:
        raise NotDiagonalizableError(
            f"geometric multiplicity {dim} is below algebraic multiplicity {want}"
        )
    return vh[len(s) - want :].conj().T


def _symplectic_partner(v: np.ndarray) -> np.ndarray:
    """For chi(A) v = lam v this vector satisfies chi(A) p = conj(lam) p."""
    n = len(v) // 2
    return np.concatenate([-v[n:].conj(), v[:n].conj()])


def diagonalize(a: QMatrix, tols: Tolerances = DEFAULT_TOLERANCES) -> Diagonalization:
    """Diagonalize a square quaternion matrix over the quaternions.

    Works on the complex adjoint: clusters its eigenvalues, checks geometric
    multiplicities cluster by cluster, then assembles quaternion eigenvector
    columns from a symplectically paired basis of each eigenspace.  Raises
    NotDiagonalizableError when some eigenvalue is defective or the
    reconstruction fails verification.
    """
    _square(a)
    n = a.rows
    chi = adjoint(a)
    fro = a.frobenius_norm()
    scale = max(1.0, fro)
    dec = clinalg.eigen_full(chi)
    w = dec.values

    radius = tols.diag_cluster * scale
    clusters = _cluster_indices(w, radius)
    eye = np.eye(2 * n, dtype=complex)

    cols1: list[np.ndarray] = []
    cols2: list[np.ndarray] = []
    dvals: list[complex] = []
    clamp = tols.clamp_imag * scale

    # sort clusters so conjugate partners are found deterministically
    cluster_info = []
    for idx_list in clusters:
        center = complex(np.mean(w[idx_list]))
        spread = max(abs(w[i] - center) for i in idx_list)
        cluster_info.append({"idx": idx_list, "center": center, "spread": spread})
    cluster_info.sort(key=lambda c: (c["center"].real, c["center"].imag))

    used = [False] * len(cluster_info)
    for ci, info in enumerate(cluster_info):
        if used[ci]:
            continue
        center = info["center"]
        alg = len(info["idx"])
        if abs(center.imag) <= clamp:
            # real eigenvalue: quaternionic eigenspace has even dimension
            used[ci] = True
            if alg % 2:
                raise PairingFailureError(
                    f"real eigenvalue {center.real:.6g} has odd multiplicity {alg} in the adjoint"
                )
            want = alg // 2
            basis = _kernel_basis(
                chi - center.real * eye, alg, info["spread"], tols.diag_rank, scale
            )
            chosen: list[np.ndarray] = []
            dirs: list[np.ndarray] = []
            for k in range(basis.shape[1]):
                v = basis[:, k].copy()
                for d in dirs:  # modified Gram-Schmidt with one refresh pass
                    v -= d * (d.conj() @ v)
                for d in dirs:
                    v -= d * (d.conj() @ v)
                nv = np.linalg.norm(v)
                if nv <= 1e-8:
                    continue
                v /= nv
                p = _symplectic_partner(v)
                for d in dirs + [v]:
                    p -= d * (d.conj() @ p)
                np_ = np.linalg.norm(p)
                if np_ <= 1e-8:
                    raise PairingFailureError(
                        "symplectic partner collapsed during eigenspace pairing"
                    )
                p /= np_
                chosen.append(v)
                dirs.extend([v, p])
                if len(chosen) == want:
                    break
            if len(chosen) < want:
                raise PairingFailureError(
                    f"could not extract {want} quaternion columns from a "
                    f"{alg}-dimensional real eigenspace"
                )
            for v in chosen:
                cols1.append(v[:n])
                cols2.append(-v[n:].conj())
                dvals.append(complex(center.real, 0.0))
            continue

        # complex eigenvalue: find the conjugate cluster
        best_j, best_d = -1, np.inf
        for cj in range(len(cluster_info)):
            if cj == ci or used[cj]:
                continue
            d = abs(cluster_info[cj]["center"] - center.conjugate())
            if d < best_d:
                best_d, best_j = d, cj
        if best_j < 0 or best_d > max(tols.pairing * scale, 4.0 * radius):
            raise PairingFailureError(
                f"no conjugate partner found for eigenvalue cluster at {center:.6g}"
            )
        partner = cluster_info[best_j]
        if len(partner["idx"]) != alg:
            raise PairingFailureError(
                "conjugate eigenvalue clusters have mismatched multiplicities "
                f"({alg} vs {len(partner['idx'])})"
            )
        used[ci] = used[best_j] = True
        rep = 0.5 * (center + partner["center"].conjugate())
        upper = rep if rep.imag > 0 else rep.conjugate()
        basis = _kernel_basis(chi - upper * eye, alg, info["spread"], tols.diag_rank, scale)
        # verify the mirrored eigenspace is no smaller (defect may hide there)
        _kernel_basis(
            chi - upper.conjugate() * eye, alg, partner["spread"], tols.diag_rank, scale
        )
        for k in range(alg):
            v = basis[:, k]
            cols1.append(v[:n])
            cols2.append(-v[n:].conj())
            dvals.append(upper)

    if len(dvals) != n:
        raise PairingFailureError(
            f"assembled {len(dvals)} quaternion eigencolumns for order {n}"
        )

    order = sorted(range(n), key=lambda k: (dvals[k].real, dvals[k].imag))
    x = QMatrix(
        np.column_stack([cols1[k] for k in order]),
        np.column_stack([cols2[k] for k in order]),
    )
    values = tuple(dvals[k] for k in order)

    try:
        xinv = inverse(x, tols)
    except SingularMatrixError as exc:
        raise NotDiagonalizableError(
            f"eigenvector matrix is numerically singular: {exc}"
        ) from exc
    residual = (
        (xinv @ a @ x) - QMatrix.diagonal(values)
    ).frobenius_norm() / max(fro, _TINY)
    if residual > tols.diag_verify:
        raise NotDiagonalizableError(
            f"diagonalization residual {residual:.3e} exceeds {tols.diag_verify:.1e}"
        )
    return Diagonalization(transform=x, values=values, residual=float(residual))


def is_diagonalizable(a: QMatrix, tols: Tolerances = DEFAULT_TOLERANCES) -> bool:
    try:
        diagonalize(a, tols)
        return True
    except NotDiagonalizableError:
        return False
