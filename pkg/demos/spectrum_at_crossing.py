"""Eigenvalue spectrum at the avoided crossing and the Zeeman doublet.

At tau = tau_c the low-lying spectrum still resembles the free rotor
(levels growing like n k^2), but the potential has split each k doublet.
The splitting of the lowest excited doublet is of order n^3 tau_c = O(n).

Run: python demos/spectrum_at_crossing.py
"""

import numpy as np

from spingap import eigen_full, find_min_gap, kramers_check, make_spin_system, standard_hamiltonian

n, q = 46, 3
ham = standard_hamiltonian(n, q, kind="extended")
crossing = find_min_gap(ham)
vals = eigen_full(ham.at(crossing.tau_c)).eigenvalues

print(f"spectrum at the crossing, n = {n}, q = {q}, tau_c = {crossing.tau_c:.6f}")
print(f"{'k':>3s} {'E_k':>12s} {'E_k - E_0':>12s}")
for k in range(10):
    print(f"{k:3d} {vals[k]:12.3f} {vals[k] - vals[0]:12.3f}")

report = kramers_check(make_spin_system(n), q, np.linspace(0, 10, 6))
print()
print(f"multiplicities of the free spectrum at eta = 0: {report.multiplicities[:6]} ...")
print(f"Zeeman splitting of the lowest excited doublet at tau_c: {report.doublet_splitting:.3f}")
print(f"for comparison, n = {n} and the minimum gap is {crossing.gap_min:.3f}")

print()
odd = kramers_check(make_spin_system(45), q, np.linspace(0, 20, 21))
print("odd n = 45: every free level is a Kramers doublet;")
print(f"multiplicities {odd.multiplicities[:6]} ..., worst relative split {odd.max_pair_split:.2e}")
print(f"E_1 - E_0 grows monotonically: smallest grid increment {odd.min_gap_increment:.3f}")
