"""numba-compiled pixel kernels (the default backend)."""

import numpy as np
from numba import njit

from .common import DCOL, DROW

NAME = "numba"


@njit(cache=True)
def label_grid(grid, value, connectivity):
    """Flood-fill labeling of pixels equal to value.

    Returns (labels, count): labels is int32 with -1 on non-matching
    pixels, component ids are assigned in raster order of first contact.
    connectivity 4 uses the even-indexed offsets only.
    """
    h, w = grid.shape
    labels = np.full((h, w), -1, dtype=np.int32)
    stack = np.empty((h * w, 2), dtype=np.int32)
    step = 2 if connectivity == 4 else 1
    count = 0
    for r0 in range(h):
        for c0 in range(w):
            if grid[r0, c0] != value or labels[r0, c0] >= 0:
                continue
            labels[r0, c0] = count
            stack[0, 0] = r0
            stack[0, 1] = c0
            top = 1
            while top > 0:
                top -= 1
                r = stack[top, 0]
                c = stack[top, 1]
                for k in range(0, 8, step):
                    rr = r + DROW[k]
                    cc = c + DCOL[k]
                    if rr < 0 or rr >= h or cc < 0 or cc >= w:
                        continue
                    if grid[rr, cc] == value and labels[rr, cc] < 0:
                        labels[rr, cc] = count
                        stack[top, 0] = rr
                        stack[top, 1] = cc
                        top += 1
            count += 1
    return labels, count


@njit(cache=True)
def config_map(grid):
    """8-bit neighborhood mask for every pixel; off-grid neighbors are white."""
    h, w = grid.shape
    out = np.zeros((h, w), dtype=np.uint8)
    for r in range(h):
        for c in range(w):
            mask = 0
            for i in range(8):
                rr = r + DROW[i]
                cc = c + DCOL[i]
                if 0 <= rr < h and 0 <= cc < w and grid[rr, cc] != 0:
                    mask |= 1 << i
            out[r, c] = mask
    return out


@njit(cache=True)
def thin_pass(grid, lut, preserve_endpoints, reverse):
    """One sequential deletion sweep; mutates grid, returns pixels deleted.

    Pixels are visited in raster order (or reversed) and deleted
    immediately, so later configurations see earlier deletions.
    """
    h, w = grid.shape
    deleted = 0
    for idx in range(h * w):
        flat = h * w - 1 - idx if reverse else idx
        r = flat // w
        c = flat % w
        if grid[r, c] == 0:
            continue
        mask = 0
        nblack = 0
        for i in range(8):
            rr = r + DROW[i]
            cc = c + DCOL[i]
            if 0 <= rr < h and 0 <= cc < w and grid[rr, cc] != 0:
                mask |= 1 << i
                nblack += 1
        if lut[mask] == 0:
            continue
        if preserve_endpoints and nblack == 1:
            continue
        grid[r, c] = 0
        deleted += 1
    return deleted
