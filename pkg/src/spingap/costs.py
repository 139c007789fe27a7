"""Symmetric cost functions on Hamming weight, exact and continuum forms.

The costs studied here depend on a bit string only through its Hamming
weight w, so they are tables f(w), w = 0..n, kept in exact integer
arithmetic. The canonical family comes from a clause construction over all
bit triples with a weight-1 penalty q; its brute-force triple sum is the
independent oracle for the closed-form table. For large n the table
approaches (n/2)^3 h(w/n) with the cubic h below.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

__all__ = [
    "SymmetricCost",
    "ScaledCost",
    "canonical_cost",
    "bruteforce_cost",
    "scaled_cost_h",
    "h_cubic_in_s",
    "cost_from_table",
    "write_cost_csv",
    "read_cost_csv",
]


@dataclass(frozen=True)
class SymmetricCost:
    """Integer cost table f(w) for w = 0..n."""

    n: int
    values: tuple[int, ...]
    q: int | None = None
    source: str = "table"

    def __post_init__(self) -> None:
        if len(self.values) != self.n + 1:
            raise ValueError("cost table must have n + 1 entries")

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=np.float64)


def canonical_cost(n: int, q: int) -> SymmetricCost:
    """Canonical triple-clause cost table.

    f(w) = (q/2) w (n-w)(n-w-1) + (1/2) w (w-1)(n-w) + (1/6) w (w-1)(w-2).

    Each term is integral on its own (consecutive-integer products), so the
    table is exact. f(0) = 0 is the global minimum; a local minimum sits
    near w = n.
    """
    if not isinstance(n, (int, np.integer)) or n < 3:
        raise ValueError(f"canonical cost needs n >= 3, got {n!r}")
    if not isinstance(q, (int, np.integer)) or q < 3:
        raise ValueError(f"canonical cost needs integer q >= 3, got {q!r}")
    n, q = int(n), int(q)
    values = tuple(
        q * w * (n - w) * (n - w - 1) // 2
        + w * (w - 1) * (n - w) // 2
        + w * (w - 1) * (w - 2) // 6
        for w in range(n + 1)
    )
    return SymmetricCost(n=n, values=values, q=q, source="canonical")


def bruteforce_cost(bits: str, q: int) -> int:
    """Exact clause sum over all bit triples; oracle for ``canonical_cost``.

    Every unordered triple (i < j < k) contributes c(z_i + z_j + z_k) with
    c(0) = 0, c(1) = q, c(2) = c(3) = 1.
    """
    if len(bits) < 3:
        raise ValueError("need at least 3 bits")
    z = [int(c) for c in bits]
    if any(b not in (0, 1) for b in z):
        raise ValueError("bit string must contain only '0' and '1'")
    clause = (0, q, 1, 1)
    return sum(clause[z[i] + z[j] + z[k]] for i, j, k in itertools.combinations(range(len(z)), 3))


def scaled_cost_h(u, q: int):
    """Continuum cost h(u) = 4q u(1-u)^2 + 4u^2(1-u) + (4/3)u^3 on [0, 1]."""
    u = np.asarray(u, dtype=np.float64)
    if np.any(u < 0.0) or np.any(u > 1.0):
        raise ValueError("u must lie in [0, 1]")
    h = 4.0 * q * u * (1.0 - u) ** 2 + 4.0 * u * u * (1.0 - u) + (4.0 / 3.0) * u ** 3
    return float(h) if h.ndim == 0 else h


@dataclass(frozen=True)
class ScaledCost:
    """Cubic coefficients of h in the spin variable s = S_z / l.

    With u = (1 - s)/2 the continuum cost becomes
    h = c0 + c1 s + c2 s^2 + c3 s^3, coefficients kept as exact rationals.
    """

    q: int
    c0: Fraction
    c1: Fraction
    c2: Fraction
    c3: Fraction

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.c0, self.c1, self.c2, self.c3)

    def evaluate(self, s):
        s = np.asarray(s, dtype=np.float64)
        val = (
            float(self.c0)
            + float(self.c1) * s
            + float(self.c2) * s * s
            + float(self.c3) * s ** 3
        )
        return float(val) if val.ndim == 0 else val


def h_cubic_in_s(q: int) -> ScaledCost:
    """Expand h(u) at u = (1-s)/2 into a cubic in s, exactly."""
    if not isinstance(q, (int, np.integer)) or q < 3:
        raise ValueError(f"need integer q >= 3, got {q!r}")
    q = int(q)
    return ScaledCost(
        q=q,
        c0=Fraction(q, 2) + Fraction(2, 3),
        c1=Fraction(q - 2, 2),
        c2=Fraction(-q, 2),
        c3=-Fraction(q, 2) + Fraction(1, 3),
    )


def cost_from_table(values) -> SymmetricCost:
    """Wrap a user-provided integer table f(w), w = 0..n."""
    vals = tuple(int(v) for v in values)
    if len(vals) < 2:
        raise ValueError("cost table needs at least two entries (n >= 1)")
    return SymmetricCost(n=len(vals) - 1, values=vals, source="table")


def write_cost_csv(cost: SymmetricCost, stream) -> None:
    """Write the table as CSV with header ``w,f``."""
    stream.write("w,f\n")
    for w, f in enumerate(cost.values):
        stream.write(f"{w},{f}\n")


def read_cost_csv(stream) -> SymmetricCost:
    """Read a ``w,f`` CSV back into a cost table."""
    header = stream.readline().strip()
    if header != "w,f":
        raise ValueError(f"expected header 'w,f', got {header!r}")
    rows = []
    for line in stream:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        w_text, f_text = line.split(",")
        rows.append((int(w_text), int(f_text)))
    rows.sort()
    if [w for w, _ in rows] != list(range(len(rows))):
        raise ValueError("cost CSV must cover w = 0..n without gaps")
    return cost_from_table([f for _, f in rows])
