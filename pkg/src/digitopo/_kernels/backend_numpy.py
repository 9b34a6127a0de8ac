"""Pure-numpy fallback kernels.

Same contracts as backend_numba; used when numba is unavailable or when
DIGITOPO_NO_NUMBA is set. Labeling runs vectorized label propagation,
the thinning sweep is a plain Python loop (its sequential semantics do
not vectorize).
"""

import numpy as np

from .common import DCOL, DROW

NAME = "numpy"

_SENTINEL = np.iinfo(np.int32).max


def _shift_min(lab, dr, dc):
    h, w = lab.shape
    shifted = np.full((h, w), _SENTINEL, dtype=np.int32)
    rs_src = slice(max(dr, 0), h + min(dr, 0))
    cs_src = slice(max(dc, 0), w + min(dc, 0))
    rs_dst = slice(max(-dr, 0), h + min(-dr, 0))
    cs_dst = slice(max(-dc, 0), w + min(-dc, 0))
    shifted[rs_dst, cs_dst] = lab[rs_src, cs_src]
    return shifted


def label_grid(grid, value, connectivity):
    """Min-label propagation until fixpoint, then relabel to 0..count-1.

    Component ids come out ordered by the raster position of each
    component's first pixel, matching the numba backend.
    """
    h, w = grid.shape
    mask = grid == value
    lab = np.where(mask, np.arange(h * w, dtype=np.int32).reshape(h, w),
                   _SENTINEL)
    step = 2 if connectivity == 4 else 1
    offsets = [(int(DROW[k]), int(DCOL[k])) for k in range(0, 8, step)]
    while True:
        prev = lab.copy()
        for dr, dc in offsets:
            np.minimum(lab, _shift_min(lab, dr, dc), out=lab, where=mask)
        if np.array_equal(lab, prev):
            break
    labels = np.full((h, w), -1, dtype=np.int32)
    roots = lab[mask]
    if roots.size:
        uniq, inv = np.unique(roots, return_inverse=True)
        labels[mask] = inv.astype(np.int32)
        count = len(uniq)
    else:
        count = 0
    return labels, count


def config_map(grid):
    """8-bit neighborhood mask for every pixel, via shifted bit-planes."""
    h, w = grid.shape
    padded = np.zeros((h + 2, w + 2), dtype=bool)
    padded[1:-1, 1:-1] = grid != 0
    out = np.zeros((h, w), dtype=np.int32)
    for i in range(8):
        dr = int(DROW[i])
        dc = int(DCOL[i])
        plane = padded[1 + dr:1 + dr + h, 1 + dc:1 + dc + w]
        out |= plane.astype(np.int32) << i
    return out.astype(np.uint8)


def thin_pass(grid, lut, preserve_endpoints, reverse):
    """One sequential deletion sweep; mutates grid, returns pixels deleted."""
    h, w = grid.shape
    order = range(h * w - 1, -1, -1) if reverse else range(h * w)
    deleted = 0
    for flat in order:
        r, c = divmod(flat, w)
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
