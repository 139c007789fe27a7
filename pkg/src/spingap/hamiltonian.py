"""Interpolating Hamiltonians: drivers, problem diagonals, basis choices.

The control Hamiltonian is H(tau) = (1 - tau) D + tau P. Two drivers are
supported: the extended one, n * S_x^2, whose ground state is spread over
the whole two_m grid, and the localized one, C(n-1, 2) (n/2 - S_x), whose
ground state is a Gaussian packet of width sqrt(l). The problem term is
diagonal in the z-basis, either the exact integer table f(l - m) or its
cubic continuum limit (n/2)^3 h(w/n).

The same operator can be assembled with x as the quantization axis, where
the kinetic term is diagonal and the cost polynomial produces a bandwidth-3
complex Hermitian matrix. That construction is kept as an independent
cross-check of the z-basis one; a diagonal phase gauge makes it real.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .banded import BandedHermitian
from .costs import SymmetricCost, h_cubic_in_s, scaled_cost_h
from .spin import SpinSystem, sx_matrix, sx_squared_matrix

__all__ = [
    "DriverSpec",
    "InterpolatingHamiltonian",
    "build_problem_matrix",
    "build_problem_matrix_continuum",
    "build_driver",
    "build_hamiltonian",
    "hamiltonian_at",
    "build_xbasis_matrix",
    "realify_gauge",
    "rescaled_matrix",
]

_GAUGE_TOL = 1e-12


@dataclass(frozen=True)
class DriverSpec:
    """Driver choice and overall energy prefactor.

    ``scale=None`` selects the standard prefactor: n for the extended
    driver (so both Hamiltonian terms grow as n^3) and C(n-1, 2) for the
    localized one.
    """

    kind: str = "extended"
    scale: float | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("extended", "localized"):
            raise ValueError(f"driver kind must be 'extended' or 'localized', got {self.kind!r}")
        if self.scale is not None and not self.scale > 0:
            raise ValueError("driver scale must be positive")

    def default_scale(self, sys: SpinSystem) -> float:
        if self.scale is not None:
            return float(self.scale)
        if self.kind == "extended":
            return float(sys.n)
        return float(math.comb(sys.n - 1, 2))


@dataclass(frozen=True)
class InterpolatingHamiltonian:
    """Pair (D, P) combined linearly as H(tau) = (1 - tau) D + tau P."""

    sys: SpinSystem
    driver: BandedHermitian
    problem: BandedHermitian
    driver_kind: str = "extended"

    def __post_init__(self) -> None:
        if self.driver.dim != self.sys.dim or self.problem.dim != self.sys.dim:
            raise ValueError("driver/problem dimension must match the spin sector")

    def at(self, tau: float) -> BandedHermitian:
        return hamiltonian_at(self, tau)

    def derivative(self) -> BandedHermitian:
        """d H / d tau = P - D, independent of tau."""
        return self.problem - self.driver


def build_problem_matrix(sys: SpinSystem, cost: SymmetricCost) -> BandedHermitian:
    """Diagonal problem term: entry at two_m is f(l - m), exactly.

    With rows ordered by descending two_m the row index equals the Hamming
    weight, so the diagonal is just the cost table.
    """
    if cost.n != sys.n:
        raise ValueError(f"cost table is for n={cost.n}, spin sector for n={sys.n}")
    return BandedHermitian((cost.as_array(),))


def build_problem_matrix_continuum(sys: SpinSystem, q: int) -> BandedHermitian:
    """Diagonal cubic continuum cost (n/2)^3 h(w/n) on the weight grid."""
    w = np.arange(sys.dim, dtype=np.float64)
    diag = (sys.n / 2.0) ** 3 * scaled_cost_h(w / sys.n, q)
    return BandedHermitian((diag,))


def build_driver(sys: SpinSystem, spec: DriverSpec) -> BandedHermitian:
    """Driver matrix in the z-basis.

    Extended: scale * S_x^2 (pentadiagonal, PSD, ground energy 0 for even
    n). Localized: scale * (n/2 - S_x) (tridiagonal, PSD, ground energy 0,
    spectrum scale * {0, 1, ..., n}).
    """
    scale = spec.default_scale(sys)
    if spec.kind == "extended":
        return scale * sx_squared_matrix(sys)
    sx = sx_matrix(sys)
    diag = np.full(sys.dim, scale * sys.n / 2.0)
    return BandedHermitian((diag, -scale * sx.diagonals[1]))


def build_hamiltonian(
    sys: SpinSystem,
    cost: SymmetricCost | None = None,
    spec: DriverSpec | None = None,
    q: int | None = None,
    problem: str = "exact",
) -> InterpolatingHamiltonian:
    """Convenience assembly of an interpolating Hamiltonian.

    Either pass an explicit ``cost`` table (``problem="exact"``) or a ``q``
    with ``problem="continuum"`` for the cubic large-n diagonal.
    """
    spec = spec or DriverSpec()
    if problem == "exact":
        if cost is None:
            raise ValueError("exact problem needs a cost table")
        p = build_problem_matrix(sys, cost)
    elif problem == "continuum":
        if q is None:
            raise ValueError("continuum problem needs q")
        p = build_problem_matrix_continuum(sys, q)
    else:
        raise ValueError(f"unknown problem form {problem!r}")
    return InterpolatingHamiltonian(
        sys=sys, driver=build_driver(sys, spec), problem=p, driver_kind=spec.kind
    )


def hamiltonian_at(ham: InterpolatingHamiltonian, tau: float) -> BandedHermitian:
    """Evaluate (1 - tau) D + tau P for tau in [0, 1]."""
    tau = float(tau)
    if not 0.0 <= tau <= 1.0:
        raise ValueError(f"tau must lie in [0, 1], got {tau}")
    return (1.0 - tau) * ham.driver + tau * ham.problem


def _lambda_arrays(sys: SpinSystem):
    """Ladder-derived coefficient arrays for the x-basis construction.

    r2[i] = l(l+1) - m_i (m_i - 1) on the descending two_m grid; the
    returned lambda arrays follow the cost-polynomial matrix elements of
    the transverse spin operator (offsets 1 and 3 purely imaginary,
    offsets 0 and 2 real).
    """
    l = sys.n / 2.0
    tm = sys.two_m_values().astype(np.float64)
    m = tm / 2.0
    ll1 = l * (l + 1.0)

    def r2(mm: np.ndarray) -> np.ndarray:
        return ll1 - mm * (mm - 1.0)

    lam0 = (ll1 - m * m) / (2.0 * l * l)
    r_m = np.sqrt(r2(m[:-1]))
    lam1 = -0.5j / l * r_m
    # offset-1 element of (S_z/l)^3: each length-3 ladder path contributes
    # |amplitude|^2/4 and the three path weights sum to 3 r^2 - 2
    lam2 = -0.125j / l ** 3 * r_m * (3.0 * r2(m[:-1]) - 2.0)
    lam3 = -0.25 / l ** 2 * np.sqrt(r2(m[:-2]) * r2(m[:-2] - 1.0))
    lam4 = -0.5j / l * np.sqrt(r2(m[:-3] - 2.0)) * lam3[:-1]
    return lam0, lam1, lam2, lam3, lam4


def _xbasis_offdiagonals(sys: SpinSystem, q: int):
    lam0, lam1, lam2, lam3, lam4 = _lambda_arrays(sys)
    diag_pot = 0.5 * (q + 4.0 / 3.0 - q * lam0)
    off1 = 0.5 * ((2.0 - q) * lam1 + (q - 2.0 / 3.0) * lam2)
    off2 = 0.5 * (-q) * lam3
    off3 = 0.5 * (q - 2.0 / 3.0) * lam4
    return diag_pot, off1, off2, off3


def build_xbasis_matrix(sys: SpinSystem, q: int, tau: float) -> BandedHermitian:
    """H(tau) with x as quantization axis: complex Hermitian, bandwidth 3.

    The kinetic term is diagonal (n * m^2) and the cubic continuum cost,
    expressed through the transverse spin operator, fills offsets 1..3.
    Spectrally identical to the z-basis continuum construction; kept as an
    independent cross-check.
    """
    tau = float(tau)
    if not 0.0 <= tau <= 1.0:
        raise ValueError(f"tau must lie in [0, 1], got {tau}")
    m = sys.m_values()
    scale = tau * (sys.n / 2.0) ** 3
    diag_pot, off1, off2, off3 = _xbasis_offdiagonals(sys, q)
    diag = (1.0 - tau) * sys.n * m * m + scale * diag_pot
    return BandedHermitian(
        (diag.astype(np.complex128), scale * off1, scale * off2, scale * off3),
        flavor="complex",
    )


def realify_gauge(matrix: BandedHermitian) -> BandedHermitian:
    """Turn an alternating-phase Hermitian band matrix real symmetric.

    Conjugation by the diagonal phases i^j multiplies the offset-p band by
    i^p, so a matrix whose odd offsets are purely imaginary and even
    offsets purely real becomes real with the same spectrum. Inputs
    violating that pattern (beyond 1e-12 of the matrix scale) are rejected.
    """
    if matrix.flavor == "real":
        return matrix
    scale = matrix.norm_inf() + 1.0
    real_diags = []
    for p, diag in enumerate(matrix.diagonals):
        gauged = (1j ** p) * diag
        if np.max(np.abs(gauged.imag), initial=0.0) > _GAUGE_TOL * scale:
            kind = "purely imaginary" if p % 2 else "real"
            raise ValueError(f"not gauge-realifiable: offset-{p} band is not {kind}")
        real_diags.append(gauged.real)
    return BandedHermitian(tuple(real_diags), flavor="real")


def rescaled_matrix(sys: SpinSystem, q: int, eta: float) -> BandedHermitian:
    """Dimensionless Hamiltonian H(tau)/n at eta = tau n^2, real symmetric.

    Diagonal (1 - tau) m^2 + (eta/16)(q + 4/3 - q L0) with the matching
    off-diagonal bands; the low-lying eigenvalues of this matrix settle to
    n-independent curves of eta. Built in the x-basis and gauged real.
    """
    eta = float(eta)
    if eta < 0.0:
        raise ValueError(f"eta must be nonnegative, got {eta}")
    tau = eta / sys.n ** 2
    m = sys.m_values()
    diag_pot, off1, off2, off3 = _xbasis_offdiagonals(sys, q)
    # tau (n/2)^3 / n = eta/8; the band arrays already carry the 1/2 of the
    # cost polynomial, so this reproduces the eta/16 coefficients
    diag = (1.0 - tau) * m * m + (eta / 8.0) * diag_pot
    raw = BandedHermitian(
        (
            diag.astype(np.complex128),
            (eta / 8.0) * off1,
            (eta / 8.0) * off2,
            (eta / 8.0) * off3,
        ),
        flavor="complex",
    )
    return realify_gauge(raw)
