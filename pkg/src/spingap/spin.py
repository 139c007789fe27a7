"""Total-spin sector of n qubits: quantum numbers, ladder matrices, profiles.

The permutation-symmetric subspace of n spin-1/2 particles carries total
spin l = n/2 and has dimension n + 1. All magnetic quantum numbers are kept
as doubled integers (two_m = 2m), so half-integer spin never produces
fractional indices. Basis vectors are ordered by two_m descending from +n
to -n, which makes the row index equal to the Hamming weight w = l - m.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .banded import BandedHermitian

__all__ = [
    "SpinSystem",
    "WavefunctionProfile",
    "make_spin_system",
    "sx_matrix",
    "sx_squared_matrix",
    "ground_state_extended_asymptotic",
    "ground_state_localized_asymptotic",
    "ground_state_localized_exact",
]


@dataclass(frozen=True)
class SpinSystem:
    """Total-spin quantum numbers for an n-qubit symmetric sector.

    Attributes
    ----------
    n:
        Qubit count.
    two_l:
        Doubled total spin, equal to n (l = n/2).
    dim:
        Sector dimension, n + 1.
    parity:
        ``"even"`` when l is integer, ``"odd"`` when l is half-integer.
    """

    n: int
    two_l: int
    dim: int
    parity: str

    def two_m_values(self) -> np.ndarray:
        """Doubled magnetic quantum numbers, descending from +n to -n."""
        return np.arange(self.n, -self.n - 1, -2, dtype=np.int64)

    def m_values(self) -> np.ndarray:
        """Magnetic quantum numbers m (possibly half-integer) as floats."""
        return self.two_m_values() / 2.0

    def index_of(self, two_m: int) -> int:
        """Row index of a doubled magnetic quantum number."""
        if (self.n - two_m) % 2 != 0 or abs(two_m) > self.n:
            raise ValueError(f"two_m={two_m} not on the grid of n={self.n}")
        return (self.n - two_m) // 2


def make_spin_system(n: int) -> SpinSystem:
    """Create the total-spin sector for ``n`` qubits (n >= 1)."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"qubit count must be a positive integer, got {n!r}")
    n = int(n)
    return SpinSystem(n=n, two_l=n, dim=n + 1, parity="even" if n % 2 == 0 else "odd")


@dataclass(frozen=True)
class WavefunctionProfile:
    """Amplitudes of a state over the two_m grid (descending order)."""

    sys: SpinSystem
    amplitudes: np.ndarray
    label: str = ""

    def __post_init__(self) -> None:
        amps = np.asarray(self.amplitudes)
        if len(amps) != self.sys.dim:
            raise ValueError("profile length must equal the sector dimension")
        object.__setattr__(self, "amplitudes", amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def _ladder_sq(two_l: int, two_m: int) -> int:
    # 4 * [l(l+1) - m(m-1)], exact in integers
    return two_l * (two_l + 2) - two_m * (two_m - 2)


def sx_matrix(sys: SpinSystem) -> BandedHermitian:
    """S_x in the z-basis: real symmetric tridiagonal with zero diagonal.

    The off-diagonal between m and m-1 is half the ladder amplitude,
    sqrt(l(l+1) - m(m-1)) / 2.
    """
    tm = sys.two_m_values()
    off = 0.25 * np.sqrt([_ladder_sq(sys.two_l, int(t)) for t in tm[:-1]])
    return BandedHermitian((np.zeros(sys.dim), off))


def sx_squared_matrix(sys: SpinSystem) -> BandedHermitian:
    """S_x^2 in the z-basis: pentadiagonal, positive semidefinite.

    Built directly from ladder algebra; equals the matrix square of
    ``sx_matrix(sys)`` (checked elementwise in the test suite).
    """
    tm = sys.two_m_values()
    ll = sys.two_l * (sys.two_l + 2)
    diag = (ll - tm.astype(np.int64) ** 2) / 8.0
    off1 = np.zeros(sys.dim - 1)
    off2 = np.array(
        [
            0.0625 * math.sqrt(_ladder_sq(sys.two_l, int(t)) * _ladder_sq(sys.two_l, int(t) - 2))
            for t in tm[:-2]
        ]
    )
    return BandedHermitian((diag, off1, off2))


def ground_state_extended_asymptotic(sys: SpinSystem, two_m: int) -> float:
    """Large-spin amplitude of the S_x^2 ground state at the given two_m.

    Valid for even n only. The amplitude vanishes identically when l - m is
    odd; otherwise it is (-1)^k (2*pi)^(-1/2) (l^2 - m^2)^(-1/4) with
    k = (l - m)/2. The closed form diverges at the grid edge |m| = l, so
    edge points are rejected.
    """
    if sys.parity != "even":
        raise ValueError("extended-driver asymptotic profile requires even n")
    if abs(two_m) > sys.n or (sys.n - two_m) % 2 != 0:
        raise ValueError(f"two_m={two_m} not on the grid of n={sys.n}")
    if abs(two_m) == sys.n:
        raise ValueError("edge singularity: asymptotic form diverges at |m| = l")
    half_diff = (sys.n - two_m) // 2  # l - m
    if half_diff % 2 != 0:
        return 0.0
    k = half_diff // 2
    l = sys.n / 2.0
    m = two_m / 2.0
    return (-1.0) ** k / math.sqrt(2.0 * math.pi) / (l * l - m * m) ** 0.25


def ground_state_localized_asymptotic(sys: SpinSystem, two_m: int) -> float:
    """Gaussian large-spin amplitude of the localized-driver ground state."""
    if abs(two_m) > sys.n or (sys.n - two_m) % 2 != 0:
        raise ValueError(f"two_m={two_m} not on the grid of n={sys.n}")
    l = sys.n / 2.0
    m = two_m / 2.0
    return math.exp(-m * m / l) / math.sqrt(math.pi * l)


def ground_state_localized_exact(sys: SpinSystem, two_m: int) -> float:
    """Exact localized-driver ground amplitude, 2^(-l) sqrt(C(2l, l-m)).

    This is the rotation coefficient taking the maximal-S_x state into the
    z-basis and serves as the independent oracle for the Gaussian
    asymptotic form and for numerically computed eigenvectors.
    """
    if abs(two_m) > sys.n or (sys.n - two_m) % 2 != 0:
        raise ValueError(f"two_m={two_m} not on the grid of n={sys.n}")
    w = (sys.n - two_m) // 2  # l - m
    comb = math.comb(sys.n, w)
    try:
        return math.sqrt(float(comb)) * 2.0 ** (-sys.n / 2.0)
    except OverflowError:
        # beyond ~n=1000 fall back to log-space evaluation
        log_amp = 0.5 * (math.lgamma(sys.n + 1) - math.lgamma(w + 1) - math.lgamma(sys.n - w + 1))
        return math.exp(log_amp - 0.5 * sys.n * math.log(2.0))
