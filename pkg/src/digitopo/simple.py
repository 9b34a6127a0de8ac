"""Simple-point classification.

A black pixel is n-simple when deleting it changes neither the number of
black n-components nor the number of white (12-n)-components of the
image. Four local characterizations of that global property are
implemented side by side with a brute-force oracle that evaluates the
definition directly on a small canvas; the test suite proves they agree
on all 256 neighborhood configurations.
"""

import enum
import functools

import numpy as np

from . import _kernels
from .grid import (as_grid, complement_config, count_components, extract_config,
                   get_pixel, opposite_adjacency, paint_config, BLACK)
from .metrics import (hilditch_number, is_interior, topological_number,
                      topological_number_complement, yokoi_number)


class Characterization(enum.Enum):
    """Selectable decision procedures for simplicity of a configuration."""

    TWO_TOPO_NUMBERS = "two-topo-numbers"
    TOPO_NUMBER_PLUS_INTERIOR = "topo-number-plus-interior"
    HILDITCH = "hilditch"
    YOKOI = "yokoi"
    ORACLE = "oracle"


def oracle_is_simple(mask: int, n: int, canvas: int = 5) -> bool:
    """Decide simplicity from the definition, by global component counts.

    The configuration is painted into the center of an all-white canvas
    (default 5x5, one white ring around the neighborhood); the center is
    then flipped white and both component counts are compared. One white
    ring suffices because every neighbor cell touches the surrounding
    white, which the labeling merges with the infinite background.
    """
    n_bar = opposite_adjacency(n)
    img = paint_config(mask, canvas)
    black_before = count_components(img, n, "black")
    white_before = count_components(img, n_bar, "white")
    mid = canvas // 2
    img[mid, mid] = 0
    black_after = count_components(img, n, "black")
    white_after = count_components(img, n_bar, "white")
    return black_before == black_after and white_before == white_after


def is_simple(mask: int, n: int,
              method: Characterization = Characterization.TOPO_NUMBER_PLUS_INTERIOR,
              ) -> bool:
    """Classify one configuration with the chosen characterization."""
    if method is Characterization.HILDITCH and n != 8:
        raise ValueError("the Hilditch crossing number only decides 8-simplicity")
    if method is Characterization.TWO_TOPO_NUMBERS:
        return (topological_number(mask, n) == 1
                and topological_number_complement(mask, opposite_adjacency(n)) == 1)
    if method is Characterization.TOPO_NUMBER_PLUS_INTERIOR:
        return topological_number(mask, n) == 1 and not is_interior(mask, n)
    if method is Characterization.HILDITCH:
        return hilditch_number(mask) == 1
    if method is Characterization.YOKOI:
        return yokoi_number(mask, n) == 1
    if method is Characterization.ORACLE:
        return oracle_is_simple(mask, n)
    raise ValueError(f"unknown characterization {method!r}")


def build_lut(n: int, method: Characterization, canvas: int = 5) -> np.ndarray:
    """256-entry boolean table: entry m classifies configuration m."""
    if method is Characterization.ORACLE:
        bits = [oracle_is_simple(m, n, canvas) for m in range(256)]
    else:
        bits = [is_simple(m, n, method) for m in range(256)]
    return np.array(bits, dtype=bool)


@functools.lru_cache(maxsize=None)
def _cached_lut_u8(n: int) -> np.ndarray:
    # production table, built through the single-topological-number test
    lut = build_lut(n, Characterization.TOPO_NUMBER_PLUS_INTERIOR)
    table = lut.astype(np.uint8)
    table.setflags(write=False)
    return table


def simplicity_lut(n: int) -> np.ndarray:
    """The cached production lookup table for n in {4, 8} (uint8 0/1)."""
    if n not in (4, 8):
        raise ValueError(f"adjacency must be 4 or 8, got {n}")
    return _cached_lut_u8(n)


def image_is_simple(img, p, n: int) -> bool:
    """LUT classification of the black pixel at (col, row)."""
    grid = as_grid(img)
    if get_pixel(grid, p) != BLACK:
        raise ValueError(f"pixel {p} is not black")
    return bool(simplicity_lut(n)[extract_config(grid, p)])


def simple_point_map(img, n: int) -> np.ndarray:
    """uint8 image marking every simple black pixel with 1."""
    grid = as_grid(img)
    configs = _kernels.config_map(grid)
    return (simplicity_lut(n)[configs] & grid).astype(np.uint8)


def deletion_changes_counts(img, p, n: int) -> bool:
    """Global before/after check for one pixel, used to cross-check the LUT."""
    grid = as_grid(img)
    col, row = p
    if grid[row, col] != BLACK:
        raise ValueError(f"pixel {p} is not black")
    n_bar = opposite_adjacency(n)
    black_before = count_components(grid, n, "black")
    white_before = count_components(grid, n_bar, "white")
    grid[row, col] = 0
    black_after = count_components(grid, n, "black")
    white_after = count_components(grid, n_bar, "white")
    grid[row, col] = 1
    return black_before != black_after or white_before != white_after


def locality_mismatches(img, n: int) -> list:
    """Black pixels where the LUT disagrees with the global check.

    Returns (col, row, mask) triples; an empty list certifies the image.
    """
    grid = as_grid(img)
    lut = simplicity_lut(n)
    configs = _kernels.config_map(grid)
    n_bar = opposite_adjacency(n)
    black_before = count_components(grid, n, "black")
    white_before = count_components(grid, n_bar, "white")
    bad = []
    for row, col in zip(*np.nonzero(grid)):
        grid[row, col] = 0
        unchanged = (count_components(grid, n, "black") == black_before
                     and count_components(grid, n_bar, "white") == white_before)
        grid[row, col] = 1
        mask = int(configs[row, col])
        if bool(lut[mask]) != unchanged:
            bad.append((int(col), int(row), mask))
    return bad


def lut_to_bitstring(lut) -> str:
    """256-character 0/1 dump, index = configuration mask."""
    bits = np.asarray(lut).astype(np.uint8).ravel()
    if bits.size != 256:
        raise ValueError(f"expected 256 entries, got {bits.size}")
    return "".join("1" if b else "0" for b in bits)


def lut_to_hex(lut) -> str:
    """32-byte hex dump; bit i of byte j holds the entry for mask 8j+i."""
    bits = np.asarray(lut).astype(np.uint8).ravel()
    if bits.size != 256:
        raise ValueError(f"expected 256 entries, got {bits.size}")
    return np.packbits(bits, bitorder="little").tobytes().hex()
