import numpy as np

from spingap import BandedHermitian


def random_banded(rng, dim, bandwidth):
    """Random real-symmetric banded matrix with U[-1, 1] entries."""
    diags = tuple(rng.uniform(-1.0, 1.0, size=dim - p) for p in range(bandwidth + 1))
    return BandedHermitian(diags)
