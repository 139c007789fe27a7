"""Banded Hermitian matrix container.

Every operator in this package is banded in its natural basis: spin ladder
operators are tridiagonal, their squares pentadiagonal, and the cubic cost
polynomial produces at most bandwidth 3. Only the main diagonal and the
upper off-diagonals are stored; the lower triangle is implied by (conjugate)
symmetry.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = ["BandedHermitian", "write_matrix_csv"]


@dataclass(frozen=True)
class BandedHermitian:
    """Hermitian matrix stored as its main and upper diagonals.

    Parameters
    ----------
    diagonals:
        Tuple of arrays; ``diagonals[p]`` is the offset-``p`` upper diagonal
        and has length ``dim - p``. The main diagonal must be real.
    flavor:
        ``"real"`` for real-symmetric storage, ``"complex"`` for complex
        Hermitian storage.
    """

    diagonals: tuple[np.ndarray, ...]
    flavor: str = "real"

    def __post_init__(self) -> None:
        if self.flavor not in ("real", "complex"):
            raise ValueError(f"unknown flavor {self.flavor!r}")
        dtype = np.float64 if self.flavor == "real" else np.complex128
        dim = len(self.diagonals[0])
        clean = []
        for p, diag in enumerate(self.diagonals):
            arr = np.asarray(diag, dtype=dtype)
            if arr.ndim != 1 or len(arr) != dim - p:
                raise ValueError(f"offset-{p} diagonal must have length {dim - p}")
            arr.setflags(write=False)
            clean.append(arr)
        if self.flavor == "complex" and np.any(np.abs(clean[0].imag) > 0):
            raise ValueError("main diagonal of a Hermitian matrix must be real")
        object.__setattr__(self, "diagonals", tuple(clean))

    @property
    def dim(self) -> int:
        return len(self.diagonals[0])

    @property
    def bandwidth(self) -> int:
        return len(self.diagonals) - 1

    def diagonal(self, offset: int = 0) -> np.ndarray:
        """Upper diagonal at the given offset (zeros beyond the bandwidth)."""
        if offset <= self.bandwidth:
            return self.diagonals[offset]
        dtype = np.float64 if self.flavor == "real" else np.complex128
        return np.zeros(max(self.dim - offset, 0), dtype=dtype)

    def to_dense(self) -> np.ndarray:
        dtype = np.float64 if self.flavor == "real" else np.complex128
        a = np.zeros((self.dim, self.dim), dtype=dtype)
        a[np.arange(self.dim), np.arange(self.dim)] = self.diagonals[0]
        for p in range(1, self.bandwidth + 1):
            idx = np.arange(self.dim - p)
            a[idx, idx + p] = self.diagonals[p]
            a[idx + p, idx] = np.conj(self.diagonals[p])
        return a

    def banded_upper(self) -> np.ndarray:
        """Upper banded storage as expected by ``scipy.linalg.eig_banded``."""
        b = self.bandwidth
        dtype = np.float64 if self.flavor == "real" else np.complex128
        ab = np.zeros((b + 1, self.dim), dtype=dtype)
        ab[b] = self.diagonals[0]
        for p in range(1, b + 1):
            ab[b - p, p:] = self.diagonals[p]
        return ab

    def matvec(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x)
        y = self.diagonals[0] * x
        for p in range(1, self.bandwidth + 1):
            d = self.diagonals[p]
            y = y.astype(np.result_type(y, d, x))
            y[: self.dim - p] += d * x[p:]
            y[p:] += np.conj(d) * x[: self.dim - p]
        return y

    def norm_inf(self) -> float:
        """Maximum absolute row sum."""
        row = np.abs(self.diagonals[0]).astype(float)
        for p in range(1, self.bandwidth + 1):
            d = np.abs(self.diagonals[p])
            row[: self.dim - p] += d
            row[p:] += d
        return float(row.max()) if self.dim else 0.0

    def trace(self) -> float:
        return float(np.real(self.diagonals[0]).sum())

    def _combine(self, other: "BandedHermitian", sign: float) -> "BandedHermitian":
        if not isinstance(other, BandedHermitian):
            return NotImplemented
        if other.dim != self.dim:
            raise ValueError("dimension mismatch")
        b = max(self.bandwidth, other.bandwidth)
        flavor = "complex" if "complex" in (self.flavor, other.flavor) else "real"
        diags = tuple(
            self.diagonal(p) + sign * other.diagonal(p) for p in range(b + 1)
        )
        return BandedHermitian(diags, flavor)

    def __add__(self, other: "BandedHermitian") -> "BandedHermitian":
        return self._combine(other, 1.0)

    def __sub__(self, other: "BandedHermitian") -> "BandedHermitian":
        return self._combine(other, -1.0)

    def __mul__(self, scalar: float) -> "BandedHermitian":
        s = float(scalar)
        return BandedHermitian(
            tuple(s * d for d in self.diagonals), self.flavor
        )

    __rmul__ = __mul__

    def allclose(self, other: "BandedHermitian", rtol: float = 1e-12, atol: float = 1e-12) -> bool:
        return np.allclose(self.to_dense(), other.to_dense(), rtol=rtol, atol=atol)


def write_matrix_csv(matrix: BandedHermitian, stream) -> None:
    """Dump nonzero entries as ``row,col,value`` lines, row-major.

    Values are written with the exact "%.17g" format so a dump round-trips
    through text without losing bits. Complex entries are written as
    ``re+imj`` with the same per-component format.
    """
    dense = matrix.to_dense()
    stream.write("row,col,value\n")
    for i in range(matrix.dim):
        for j in range(matrix.dim):
            v = dense[i, j]
            if v == 0:
                continue
            if matrix.flavor == "real":
                text = "%.17g" % v.real
            else:
                text = "%.17g%+.17gj" % (v.real, v.imag)
            stream.write(f"{i},{j},{text}\n")
