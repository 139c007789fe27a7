"""Real-symmetric banded eigensolver with residual diagnostics.

Solves are delegated to LAPACK through ``scipy.linalg`` (banded symmetric
storage), which performs the usual reduction to tridiagonal form plus
implicit-shift iteration. Every solve that returns eigenvectors also
records the worst eigenpair residual and the worst orthogonality defect so
downstream gap measurements carry their own error bars.

Complex Hermitian matrices are not accepted here; gauge them real first
(see ``hamiltonian.realify_gauge``).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .banded import BandedHermitian

__all__ = ["Spectrum", "EigenSolverError", "eigen_full", "eigen_lowest"]


class EigenSolverError(RuntimeError):
    """Raised when LAPACK reports non-convergence or invalid input."""


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in nondecreasing order, optionally with eigenvectors.

    ``residual_max`` is max_k ||M v_k - lambda_k v_k||_2 and ``ortho_max``
    the largest off-diagonal of V^T V; both are None when eigenvectors were
    not requested.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray | None = None
    residual_max: float | None = None
    ortho_max: float | None = None

    @property
    def gap(self) -> float:
        """E_1 - E_0 (needs at least two eigenvalues)."""
        return float(self.eigenvalues[1] - self.eigenvalues[0])


def _diagnostics(matrix: BandedHermitian, values: np.ndarray, vectors: np.ndarray):
    residual = matrix.to_dense() @ vectors - vectors * values[np.newaxis, :]
    residual_max = float(np.max(np.linalg.norm(residual, axis=0), initial=0.0))
    gram = vectors.T @ vectors
    np.fill_diagonal(gram, 0.0)
    ortho_max = float(np.max(np.abs(gram), initial=0.0))
    return residual_max, ortho_max


def _fix_signs(vectors: np.ndarray) -> np.ndarray:
    """Canonical sign per column: first significant entry positive."""
    for col in range(vectors.shape[1]):
        column = vectors[:, col]
        cutoff = 1e-12 * float(np.max(np.abs(column)))
        for entry in column:
            if abs(entry) > cutoff:
                if entry < 0:
                    vectors[:, col] = -column
                break
    return vectors


def _solve(matrix: BandedHermitian, want_vectors: bool, select_count: int | None) -> Spectrum:
    if matrix.flavor != "real":
        raise EigenSolverError(
            "solver accepts real-symmetric input only; apply the realifying gauge first"
        )
    band = matrix.banded_upper()
    if not np.all(np.isfinite(band)):
        raise EigenSolverError("matrix contains non-finite entries")
    kwargs = {}
    if select_count is not None:
        kwargs = {"select": "i", "select_range": (0, select_count - 1)}
    try:
        if want_vectors:
            values, vectors = scipy.linalg.eig_banded(band, lower=False, **kwargs)
        else:
            values = scipy.linalg.eig_banded(
                band, lower=False, eigvals_only=True, **kwargs
            )
            vectors = None
    except (np.linalg.LinAlgError, scipy.linalg.LinAlgError) as exc:
        raise EigenSolverError(f"eigensolver failed to converge: {exc}") from exc
    order = np.argsort(values, kind="stable")
    values = values[order]
    if vectors is None:
        return Spectrum(eigenvalues=values)
    vectors = _fix_signs(vectors[:, order])
    residual_max, ortho_max = _diagnostics(matrix, values, vectors)
    return Spectrum(values, vectors, residual_max, ortho_max)


def eigen_full(matrix: BandedHermitian, want_vectors: bool = False) -> Spectrum:
    """All eigenvalues of a real-symmetric banded matrix, ascending."""
    return _solve(matrix, want_vectors, None)


def eigen_lowest(matrix: BandedHermitian, k: int, want_vectors: bool = False) -> Spectrum:
    """The k lowest eigenpairs (1 <= k <= dim)."""
    if not 1 <= k <= matrix.dim:
        raise ValueError(f"k must lie in [1, {matrix.dim}], got {k}")
    return _solve(matrix, want_vectors, int(k))
