"""Dense complex linear algebra primitives used by every other module.

All values are plain ``numpy.ndarray`` objects with ``complex128`` entries
(binary64 real and imaginary parts).  Desk-scale matrices (m of order tens)
keep conditioning benign, so no arbitrary precision is used anywhere.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg

#: Default structural tolerance for every predicate that needs one.
DEFAULT_TOL = 1e-8


def as_complex_matrix(value, name: str = "matrix") -> np.ndarray:
    """Coerce ``value`` to a 2-D complex128 array with finite entries."""
    mat = np.asarray(value, dtype=complex)
    if mat.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {mat.shape}")
    if mat.size and not np.all(np.isfinite(mat)):
        raise ValueError(f"{name} contains NaN or Inf entries")
    return mat


def as_square_matrix(value, name: str = "matrix") -> np.ndarray:
    mat = as_complex_matrix(value, name)
    rows, cols = mat.shape
    if rows != cols:
        raise ValueError(f"{name} must be square, got {rows}x{cols}")
    return mat


def determinant(matrix) -> complex:
    """Determinant of a square complex matrix.

    Computed from an LU factorization with partial pivoting; the parity of
    the row swaps is tracked explicitly so the sign/phase of the result is
    exact.  The empty 0x0 matrix has determinant 1 (empty-minor convention).
    """
    mat = as_square_matrix(matrix)
    dim = mat.shape[0]
    if dim == 0:
        return 1 + 0j
    with warnings.catch_warnings():
        # singular inputs are legitimate here and simply yield det = 0
        warnings.simplefilter("ignore")
        lu, piv = scipy.linalg.lu_factor(mat, check_finite=False)
    swaps = int(np.count_nonzero(piv != np.arange(dim)))
    sign = -1.0 if swaps % 2 else 1.0
    return complex(sign * np.prod(np.diag(lu)))


@dataclass(frozen=True)
class SVDResult:
    """Economy-size singular value decomposition ``left @ diag(s) @ right†``.

    ``left`` and ``right`` are column-orthonormal; ``singular_values`` is
    sorted in descending order and nonnegative.
    """

    left: np.ndarray
    singular_values: np.ndarray
    right: np.ndarray

    def reconstruct(self) -> np.ndarray:
        return (self.left * self.singular_values) @ self.right.conj().T


def svd(matrix) -> SVDResult:
    """Singular value decomposition with descending singular values."""
    mat = as_complex_matrix(matrix)
    u, s, vh = np.linalg.svd(mat, full_matrices=False)
    return SVDResult(left=u, singular_values=s, right=vh.conj().T)


def spectral_norm(matrix) -> float:
    """Largest singular value of ``matrix`` (operator 2-norm)."""
    mat = as_complex_matrix(matrix)
    if mat.size == 0:
        return 0.0
    return float(np.linalg.svd(mat, compute_uv=False)[0])


def haar_unitary(m: int, rng: np.random.Generator) -> np.ndarray:
    """Draw an ``m x m`` unitary Haar-uniformly.

    QR decomposition of a complex Ginibre matrix, with the diagonal of R
    rephased to unit modulus so the distribution is exactly Haar rather
    than QR-convention dependent.  Deterministic for a given generator
    state: equal seeds yield bit-identical matrices.
    """
    if m < 1:
        raise ValueError(f"mode count must be >= 1, got {m}")
    ginibre = (rng.standard_normal((m, m)) + 1j * rng.standard_normal((m, m))) / np.sqrt(2.0)
    q, r = np.linalg.qr(ginibre)
    diag = np.diag(r)
    return q * (diag / np.abs(diag))


def is_unitary(matrix, tol: float = DEFAULT_TOL) -> bool:
    mat = as_square_matrix(matrix)
    eye = np.eye(mat.shape[0])
    return float(np.max(np.abs(mat.conj().T @ mat - eye))) <= tol


def is_valid_correlation(K, n: int, tol: float = DEFAULT_TOL) -> bool:
    """True iff ``K`` is a Hermitian projector with trace ``n`` and spectrum in [0, 1].

    The four checks, each with tolerance ``tol``: Hermiticity in max-entry
    modulus, eigenvalues within [-tol, 1 + tol], projector residual
    ``K @ K - K`` in max-entry modulus, and trace within ``tol`` of ``n``.
    """
    mat = as_square_matrix(K)
    m = mat.shape[0]
    if not 1 <= n <= m:
        raise ValueError(f"need 1 <= n <= m, got n={n}, m={m}")
    if float(np.max(np.abs(mat - mat.conj().T))) > tol:
        return False
    eigs = np.linalg.eigvalsh((mat + mat.conj().T) / 2)
    if eigs[0] < -tol or eigs[-1] > 1 + tol:
        return False
    if float(np.max(np.abs(mat @ mat - mat))) > tol:
        return False
    return abs(complex(np.trace(mat)) - n) <= tol
