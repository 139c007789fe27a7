"""Rotor effective potential for the triple-clause cost.

In the large-spin limit the extended driver n S_x^2 turns into the kinetic
energy of a particle on a ring and the cost turns into a potential
V(phi) = h((1 - sin phi)/2). The global minimum of h at u = 0 sits at
phi = pi/2 and the local minimum at u = 1 sits at phi = -pi/2; between
them the potential is smooth, which is why no tunneling barrier survives
for the extended driver.

Run: python demos/effective_potential.py [--plot]
"""

import sys

import numpy as np

from spingap import wkb_potential

q = 3
phi = np.linspace(-np.pi, np.pi, 33)
pot = wkb_potential(q, phi)

print(f"rotor potential V(phi) for q = {q}")
print(f"{'phi/pi':>8s} {'V':>10s}")
for p, v in zip(phi[::4], pot[::4]):
    print(f"{p / np.pi:8.3f} {v:10.6f}")

print()
print(f"global minimum V(+pi/2) = {wkb_potential(q, np.pi / 2):.3g}")
print(f"local value   V(-pi/2) = {wkb_potential(q, -np.pi / 2):.6f} (= 4/3)")
print(f"barrier top   V(0)     = {wkb_potential(q, 0.0):.6f} (= 13/6 at q = 3)")

if "--plot" in sys.argv:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fine = np.linspace(-np.pi, np.pi, 513)
    plt.plot(fine / np.pi, wkb_potential(q, fine))
    plt.xlabel(r"$\varphi/\pi$")
    plt.ylabel(r"$V(\varphi)$")
    plt.title(f"Rotor effective potential, q = {q}")
    plt.savefig("effective_potential.png", dpi=120)
    print("saved effective_potential.png")
