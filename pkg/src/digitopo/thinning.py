"""Sequential topology-preserving thinning.

Pixels are deleted one at a time, each only when its current
neighborhood classifies as simple, so both global component counts are
invariant across the whole run. The audit recomputes those counts on
input and output and flags any mismatch instead of trusting the sweep.
"""

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .grid import OFFSETS, as_grid, count_components, opposite_adjacency
from .simple import simplicity_lut, deletion_changes_counts


@dataclass(frozen=True)
class ThinningPolicy:
    n: int = 8
    preserve_endpoints: bool = False
    scan_order: str = "raster"  # or "reverse_raster"

    def __post_init__(self):
        if self.n not in (4, 8):
            raise ValueError(f"adjacency must be 4 or 8, got {self.n}")
        if self.scan_order not in ("raster", "reverse_raster"):
            raise ValueError(f"unknown scan order {self.scan_order!r}")


@dataclass
class ThinningReport:
    """Run statistics plus the before/after topology audit."""

    iterations: int
    deleted: int
    black_before: int
    black_after: int
    white_before: int
    white_after: int

    @property
    def topology_preserved(self) -> bool:
        return (self.black_before == self.black_after
                and self.white_before == self.white_after)

    def __str__(self):
        ok = "preserved" if self.topology_preserved else "BROKEN"
        return (f"iterations={self.iterations} deleted={self.deleted} "
                f"black components {self.black_before}->{self.black_after} "
                f"white components {self.white_before}->{self.white_after} "
                f"topology {ok}")


def is_endpoint(mask: int) -> bool:
    """Exactly one black neighbor among all 8 (a curve end, kept by policy)."""
    return bin(mask).count("1") == 1


def audit(img_before, img_after, n: int) -> ThinningReport:
    """Compare both global component counts between two images."""
    before = as_grid(img_before)
    after = as_grid(img_after)
    n_bar = opposite_adjacency(n)
    return ThinningReport(
        iterations=0,
        deleted=int(before.sum()) - int(after.sum()),
        black_before=count_components(before, n, "black"),
        black_after=count_components(after, n, "black"),
        white_before=count_components(before, n_bar, "white"),
        white_after=count_components(after, n_bar, "white"),
    )


def thin(img, policy: ThinningPolicy = ThinningPolicy(),
         paranoid: bool = False):
    """Thin to a fixpoint; returns (thinned image, report).

    Repeats full sweeps in the policy's scan order until a sweep deletes
    nothing. iterations counts the sweeps that deleted at least one
    pixel. paranoid re-audits the whole image after every single
    deletion (slow; for tests) and raises RuntimeError on a violation.
    """
    before = as_grid(img)
    grid = before.copy()
    lut = simplicity_lut(policy.n)
    reverse = policy.scan_order == "reverse_raster"
    iterations = 0
    deleted = 0
    while True:
        if paranoid:
            removed = _paranoid_pass(grid, policy, reverse)
        else:
            removed = int(_kernels.thin_pass(grid, lut,
                                             policy.preserve_endpoints, reverse))
        if removed == 0:
            break
        iterations += 1
        deleted += removed
    report = audit(before, grid, policy.n)
    report.iterations = iterations
    report.deleted = deleted
    return grid, report


def _paranoid_pass(grid, policy, reverse) -> int:
    # python re-implementation of one sweep that audits every deletion
    lut = simplicity_lut(policy.n)
    n_bar = opposite_adjacency(policy.n)
    black_ref = count_components(grid, policy.n, "black")
    white_ref = count_components(grid, n_bar, "white")
    h, w = grid.shape
    order = range(h * w - 1, -1, -1) if reverse else range(h * w)
    deleted = 0
    for flat in order:
        r, c = divmod(flat, w)
        if grid[r, c] == 0:
            continue
        if deletion_would_apply(grid, c, r, lut, policy.preserve_endpoints):
            changes = deletion_changes_counts(grid, (c, r), policy.n)
            grid[r, c] = 0
            deleted += 1
            if changes:
                raise RuntimeError(
                    f"deleting ({c},{r}) changed a component count")
            if (count_components(grid, policy.n, "black") != black_ref
                    or count_components(grid, n_bar, "white") != white_ref):
                raise RuntimeError(
                    f"component counts drifted after deleting ({c},{r})")
    return deleted


def deletion_would_apply(grid, col, row, lut, preserve_endpoints) -> bool:
    """Whether the sweep would delete this black pixel right now."""
    h, w = grid.shape
    mask = 0
    for i, (dc, dr) in enumerate(OFFSETS):
        rr, cc = row + dr, col + dc
        if 0 <= rr < h and 0 <= cc < w and grid[rr, cc] != 0:
            mask |= 1 << i
    if not lut[mask]:
        return False
    if preserve_endpoints and is_endpoint(mask):
        return False
    return True


def remaining_deletable(img, policy: ThinningPolicy) -> list:
    """Black pixels the policy could still delete (empty at a fixpoint)."""
    grid = as_grid(img)
    lut = simplicity_lut(policy.n)
    out = []
    for row, col in zip(*np.nonzero(grid)):
        if deletion_would_apply(grid, int(col), int(row), lut,
                                policy.preserve_endpoints):
            out.append((int(col), int(row)))
    return out
