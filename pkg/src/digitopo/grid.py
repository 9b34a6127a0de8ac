"""Grid conventions, neighborhoods and connected-component labeling.

Images are 2D numpy arrays of shape (height, width), indexed [row, col],
with 1 = black (object) and 0 = white. Everything outside the array is
white: a finite image embedded in an infinite white plane. Coordinates
are (col, row) pairs, col growing rightward and row growing downward.

The 8 neighbors of a pixel are indexed 0..7 counterclockwise starting
East: E, NE, N, NW, W, SW, S, SE. Even indices are the 4-neighbors.
A neighborhood configuration is the 8-bit mask whose bit i is the
black/white state of neighbor i; the center pixel is not encoded and is
assumed black.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels

BLACK = 1
WHITE = 0

# (dcol, drow) for neighbors x_0..x_7: E, NE, N, NW, W, SW, S, SE
OFFSETS = ((1, 0), (1, -1), (0, -1), (-1, -1), (-1, 0), (-1, 1), (0, 1), (1, 1))

FOUR_NEIGHBOR_BITS = 0b01010101  # even bit positions


def opposite_adjacency(n: int) -> int:
    """The complement adjacency: 4 -> 8, 8 -> 4."""
    if n not in (4, 8):
        raise ValueError(f"adjacency must be 4 or 8, got {n}")
    return 12 - n


def as_grid(img) -> np.ndarray:
    """Normalize an array-like image to a contiguous uint8 0/1 grid."""
    a = np.asarray(img)
    if a.ndim != 2:
        raise ValueError(f"image must be 2D, got shape {a.shape}")
    return np.ascontiguousarray((a != 0).astype(np.uint8))


def neighbors(p, n: int):
    """Neighbors of p under n-adjacency, in x_i traversal order.

    p is a (col, row) pair; returns the 4 or 8 surrounding coordinates.
    """
    if n not in (4, 8):
        raise ValueError(f"adjacency must be 4 or 8, got {n}")
    col, row = p
    step = 2 if n == 4 else 1
    return [(col + dc, row + dr) for dc, dr in OFFSETS[::step]]


def get_pixel(img: np.ndarray, p) -> int:
    """Pixel value at (col, row); out-of-bounds reads are white."""
    col, row = p
    h, w = img.shape
    if 0 <= row < h and 0 <= col < w:
        return int(img[row, col])
    return WHITE


def extract_config(img: np.ndarray, p) -> int:
    """8-bit neighborhood mask of a black pixel at (col, row)."""
    if get_pixel(img, p) != BLACK:
        raise ValueError(f"center pixel {p} is not black")
    col, row = p
    mask = 0
    for i, (dc, dr) in enumerate(OFFSETS):
        if get_pixel(img, (col + dc, row + dr)) == BLACK:
            mask |= 1 << i
    return mask


def complement_config(mask: int) -> int:
    """Invert all 8 neighbor bits (black <-> white)."""
    return ~mask & 0xFF


def paint_config(mask: int, size: int = 3) -> np.ndarray:
    """Write a configuration into the center of a size x size white canvas.

    The center pixel is black, its 8 neighbors follow the mask bits, and
    any remaining ring is white. size must be odd and >= 3.
    """
    if size < 3 or size % 2 == 0:
        raise ValueError(f"canvas size must be odd and >= 3, got {size}")
    img = np.zeros((size, size), dtype=np.uint8)
    mid = size // 2
    img[mid, mid] = BLACK
    for i, (dc, dr) in enumerate(OFFSETS):
        if mask >> i & 1:
            img[mid + dr, mid + dc] = BLACK
    return img


@dataclass
class Labeling:
    """Per-pixel component ids for one color and one adjacency.

    labels holds ids >= 0 on pixels of the labeled color and -1 elsewhere.
    When includes_background is set, the image was padded by one white
    ring before labeling so all border-touching white belongs to a single
    background component (ids present in-bounds may then skip the
    background's id).
    """

    labels: np.ndarray
    count: int
    adjacency: int
    color: str
    includes_background: bool = False


def label_components(img, adjacency: int, color: str) -> Labeling:
    """Label the n-connected components of one color.

    color is "black" or "white". White labeling conceptually embeds the
    image in the infinite white plane: the grid is padded by one white
    ring and every white pixel reachable from the border joins the single
    background component.
    """
    if adjacency not in (4, 8):
        raise ValueError(f"adjacency must be 4 or 8, got {adjacency}")
    if color not in ("black", "white"):
        raise ValueError(f"color must be 'black' or 'white', got {color!r}")
    grid = as_grid(img)
    if color == "black":
        labels, count = _kernels.label_grid(grid, np.uint8(BLACK), adjacency)
        return Labeling(labels, count, adjacency, color)
    padded = np.zeros((grid.shape[0] + 2, grid.shape[1] + 2), dtype=np.uint8)
    padded[1:-1, 1:-1] = grid
    labels, count = _kernels.label_grid(padded, np.uint8(WHITE), adjacency)
    return Labeling(labels[1:-1, 1:-1].copy(), count, adjacency, color,
                    includes_background=True)


def count_components(img, adjacency: int, color: str) -> int:
    """Component count, background-merged for white (see label_components)."""
    return label_components(img, adjacency, color).count
