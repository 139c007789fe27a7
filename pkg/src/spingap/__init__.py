"""Adiabatic spectra of Hamming-symmetric costs in the total-spin sector.

The package builds the interpolating Hamiltonian
H(tau) = (1 - tau) D + tau P on the (n+1)-dimensional symmetric sector of
n qubits, where P is a cost diagonal f(n/2 - S_z) and D is either the
extended driver n S_x^2 or the localized driver C(n-1, 2)(n/2 - S_x).
It traces adiabatic eigenvalues, locates and refines the minimum gap,
fits its scaling with n, checks the free-rotor closed forms against exact
diagonalization, and propagates the Schrodinger equation across the
schedule.
"""

from .analysis import (
    DegeneracyReport,
    EvolutionResult,
    GapTrace,
    MinGapResult,
    PerturbativeEstimate,
    ScalingFit,
    evolve_schrodinger,
    find_min_gap,
    gap_trace,
    ground_state_profile,
    kramers_check,
    perturbative_estimate,
    runtime_bound,
    scaling_study,
    standard_hamiltonian,
    wkb_matrix_element,
    wkb_matrix_element_quad,
    wkb_potential,
)
from .banded import BandedHermitian, write_matrix_csv
from .costs import (
    ScaledCost,
    SymmetricCost,
    bruteforce_cost,
    canonical_cost,
    cost_from_table,
    h_cubic_in_s,
    read_cost_csv,
    scaled_cost_h,
    write_cost_csv,
)
from .eigen import EigenSolverError, Spectrum, eigen_full, eigen_lowest
from .hamiltonian import (
    DriverSpec,
    InterpolatingHamiltonian,
    build_driver,
    build_hamiltonian,
    build_problem_matrix,
    build_problem_matrix_continuum,
    build_xbasis_matrix,
    hamiltonian_at,
    realify_gauge,
    rescaled_matrix,
)
from .spin import (
    SpinSystem,
    WavefunctionProfile,
    ground_state_extended_asymptotic,
    ground_state_localized_asymptotic,
    ground_state_localized_exact,
    make_spin_system,
    sx_matrix,
    sx_squared_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "BandedHermitian",
    "DegeneracyReport",
    "DriverSpec",
    "EigenSolverError",
    "EvolutionResult",
    "GapTrace",
    "InterpolatingHamiltonian",
    "MinGapResult",
    "PerturbativeEstimate",
    "ScaledCost",
    "ScalingFit",
    "Spectrum",
    "SpinSystem",
    "SymmetricCost",
    "WavefunctionProfile",
    "bruteforce_cost",
    "build_driver",
    "build_hamiltonian",
    "build_problem_matrix",
    "build_problem_matrix_continuum",
    "build_xbasis_matrix",
    "canonical_cost",
    "cost_from_table",
    "eigen_full",
    "eigen_lowest",
    "evolve_schrodinger",
    "find_min_gap",
    "gap_trace",
    "ground_state_extended_asymptotic",
    "ground_state_localized_asymptotic",
    "ground_state_localized_exact",
    "ground_state_profile",
    "h_cubic_in_s",
    "hamiltonian_at",
    "kramers_check",
    "make_spin_system",
    "perturbative_estimate",
    "read_cost_csv",
    "realify_gauge",
    "rescaled_matrix",
    "runtime_bound",
    "scaled_cost_h",
    "scaling_study",
    "standard_hamiltonian",
    "sx_matrix",
    "sx_squared_matrix",
    "wkb_matrix_element",
    "wkb_matrix_element_quad",
    "wkb_potential",
    "write_cost_csv",
    "write_matrix_csv",
]
