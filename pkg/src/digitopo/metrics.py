"""Per-configuration neighborhood metrics.

All functions take an 8-bit neighborhood mask (center assumed black) and
return small non-negative integers. The module precomputes each metric
over all 256 masks into lookup tables at import time; the scalar
functions are the single source of truth those tables are built from.
"""

import numpy as np

from .grid import OFFSETS, FOUR_NEIGHBOR_BITS, complement_config


def _adjacency_bitmasks(n: int):
    # adj[i] = bitmask of neighbor indices j n-adjacent to neighbor i,
    # measured between the actual grid positions (center excluded).
    adj = []
    for i, (ci, ri) in enumerate(OFFSETS):
        bits = 0
        for j, (cj, rj) in enumerate(OFFSETS):
            if i == j:
                continue
            if n == 4:
                near = abs(ci - cj) + abs(ri - rj) == 1
            else:
                near = max(abs(ci - cj), abs(ri - rj)) == 1
            if near:
                bits |= 1 << j
        adj.append(bits)
    return tuple(adj)


_ADJ = {4: _adjacency_bitmasks(4), 8: _adjacency_bitmasks(8)}


def _component_bits(mask: int, start: int, adj) -> int:
    # bitmask of the connected component of `start` within the set bits
    comp = 1 << start
    frontier = comp
    while frontier:
        grown = 0
        f = frontier
        while f:
            i = (f & -f).bit_length() - 1
            f &= f - 1
            grown |= adj[i] & mask
        frontier = grown & ~comp
        comp |= grown
    return comp


def topological_number(mask: int, n: int) -> int:
    """Number of n-components of the black neighbors, n-adjacent to center.

    Components live entirely inside the 8-cell neighborhood (the center
    never joins paths). Every 8-component touches the center, so for n=8
    this is the plain component count; for n=4 a component only counts
    if it contains one of the four edge neighbors.
    """
    if n not in (4, 8):
        raise ValueError(f"adjacency must be 4 or 8, got {n}")
    adj = _ADJ[n]
    seen = 0
    count = 0
    for i in range(8):
        if mask >> i & 1 and not seen >> i & 1:
            comp = _component_bits(mask, i, adj)
            seen |= comp
            if n == 8 or comp & FOUR_NEIGHBOR_BITS:
                count += 1
    return count


def topological_number_complement(mask: int, n_bar: int) -> int:
    """Topological number of the white neighbors under the complement adjacency."""
    return topological_number(complement_config(mask), n_bar)


def hilditch_number(mask: int, start: int = 0) -> int:
    """Crossing number for 8-adjacency.

    Walk the circular traversal x_0..x_7, dropping each diagonal whose
    two flanking edge neighbors are both black (the corner is crossed
    directly), then count 0->1 passages around the reduced cycle. The
    start parameter rotates the traversal to another edge neighbor
    (start in {0,2,4,6}); the result does not depend on it.
    """
    if start % 2 != 0:
        raise ValueError("traversal must start at a 4-neighbor")
    p = [(mask >> ((start + i) % 8)) & 1 for i in range(8)]
    keep = [True] * 8
    for k in range(1, 8, 2):
        if p[k - 1] and p[(k + 1) % 8]:
            keep[k] = False
    seq = [p[i] for i in range(8) if keep[i]]
    return sum(1 for a, b in zip(seq, seq[1:] + seq[:1]) if a == 0 and b == 1)


def yokoi_number(mask: int, n: int) -> int:
    """Yokoi connectivity number over the four edge-anchored triples."""
    if n not in (4, 8):
        raise ValueError(f"adjacency must be 4 or 8, got {n}")
    p = [(mask >> (i % 8)) & 1 for i in range(9)]
    if n == 4:
        return sum(p[k] - p[k] * p[k + 1] * p[k + 2] for k in (0, 2, 4, 6))
    return sum((1 - p[k]) - (1 - p[k]) * (1 - p[k + 1]) * (1 - p[k + 2])
               for k in (0, 2, 4, 6))


def is_interior(mask: int, n: int) -> bool:
    """True when no white pixel is (12-n)-adjacent to the center."""
    if n == 4:
        return mask == 0xFF
    if n == 8:
        return mask & FOUR_NEIGHBOR_BITS == FOUR_NEIGHBOR_BITS
    raise ValueError(f"adjacency must be 4 or 8, got {n}")


def is_isolated(mask: int, n: int) -> bool:
    """True when no black pixel is n-adjacent to the center."""
    if n == 4:
        return mask & FOUR_NEIGHBOR_BITS == 0
    if n == 8:
        return mask == 0
    raise ValueError(f"adjacency must be 4 or 8, got {n}")


def _table(fn) -> np.ndarray:
    return np.array([fn(m) for m in range(256)], dtype=np.uint8)


# Precomputed once; every enumeration and image sweep reads these.
T4_TABLE = _table(lambda m: topological_number(m, 4))
T8_TABLE = _table(lambda m: topological_number(m, 8))
HILDITCH_TABLE = _table(hilditch_number)
Y4_TABLE = _table(lambda m: yokoi_number(m, 4))
Y8_TABLE = _table(lambda m: yokoi_number(m, 8))

for _t in (T4_TABLE, T8_TABLE, HILDITCH_TABLE, Y4_TABLE, Y8_TABLE):
    _t.setflags(write=False)


def topo_table(n: int) -> np.ndarray:
    return T4_TABLE if n == 4 else T8_TABLE


def yokoi_table(n: int) -> np.ndarray:
    return Y4_TABLE if n == 4 else Y8_TABLE
