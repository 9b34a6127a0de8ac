"""Shared constants for both kernel backends."""

import numpy as np

# Neighbor offsets x_0..x_7 (E, NE, N, NW, W, SW, S, SE), split into
# column and row deltas so numba kernels can index them cheaply.
DCOL = np.array([1, 1, 0, -1, -1, -1, 0, 1], dtype=np.int64)
DROW = np.array([0, -1, -1, -1, 0, 1, 1, 1], dtype=np.int64)
