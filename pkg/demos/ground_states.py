"""Extended vs localized driver ground states in the z-basis.

The extended driver's ground state spreads over the whole m grid with an
envelope (l^2 - m^2)^(-1/4) (on the even l - m sublattice), while the
localized driver concentrates on |m| of order sqrt(l). The exact binomial
amplitudes 2^(-l) sqrt(C(2l, l-m)) reproduce the latter to machine
precision.

Run: python demos/ground_states.py [--plot]
"""

import sys

import numpy as np

from spingap import (
    ground_state_extended_asymptotic,
    ground_state_localized_exact,
    ground_state_profile,
    standard_hamiltonian,
)

n, q = 100, 3
ext = standard_hamiltonian(n, q, kind="extended")
loc = standard_hamiltonian(n, q, kind="localized")
prof_ext = ground_state_profile(ext, 0.0, label="extended driver")
prof_loc = ground_state_profile(loc, 0.0, label="localized driver")
s = ext.sys
tms = s.two_m_values()

print(f"driver ground states at n = {n} (tau = 0)")
print(f"{'m':>5s} {'extended':>12s} {'envelope':>12s} {'localized':>12s} {'binomial':>12s}")
for tm in range(100, -101, -20):
    i = s.index_of(tm)
    m = tm / 2.0
    if abs(tm) < n and (n - tm) // 2 % 2 == 0:
        envelope = abs(ground_state_extended_asymptotic(s, tm)) * 2.0
    else:
        envelope = float("nan")
    oracle = ground_state_localized_exact(s, tm)
    print(
        f"{m:5.0f} {prof_ext.amplitudes[i]:12.5f} {envelope:12.5f} "
        f"{prof_loc.amplitudes[i]:12.5f} {oracle:12.5f}"
    )

print()
print("(the closed-form envelope is shape-only; the factor 2 above is the")
print(" measured normalization of the exact state against it)")
dev = max(
    abs(prof_loc.amplitudes[s.index_of(int(tm))] - ground_state_localized_exact(s, int(tm)))
    for tm in tms
)
print(f"localized state vs binomial amplitudes: max deviation {dev:.2e}")

if "--plot" in sys.argv:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ms = s.m_values()
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(ms, np.abs(prof_ext.amplitudes), ".", ms=3, label="extended (|S_x| = 0 state)")
    ax.plot(ms, np.abs(prof_loc.amplitudes), ".", ms=3, label="localized (S_x = l state)")
    ax.set_xlabel("m")
    ax.set_ylabel("|amplitude|")
    ax.legend()
    fig.savefig("ground_states.png", dpi=120)
    print("saved ground_states.png")
