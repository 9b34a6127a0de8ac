"""Netpbm PBM reader/writer, plain (P1) and packed (P4).

PBM bit 1 is black and maps to 1 (object) in the grid; bit 0 is white.
P4 rows are padded to a byte boundary, MSB first; padding bits are
ignored on read and written as zeros.
"""

import numpy as np

_WHITESPACE = b" \t\r\n\x0b\x0c"


class PBMError(ValueError):
    """Malformed PBM input; offset is the byte position of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def _skip_space_and_comments(data: bytes, pos: int) -> int:
    while pos < len(data):
        b = data[pos:pos + 1]
        if b in (b"#",):
            while pos < len(data) and data[pos:pos + 1] not in (b"\n", b"\r"):
                pos += 1
        elif b and b in _WHITESPACE:
            pos += 1
        else:
            break
    return pos


def _read_int(data: bytes, pos: int):
    pos = _skip_space_and_comments(data, pos)
    start = pos
    while pos < len(data) and data[pos:pos + 1].isdigit():
        pos += 1
    if pos == start:
        raise PBMError("expected an unsigned integer", start)
    return int(data[start:pos]), pos, start


def read_pbm(data: bytes) -> np.ndarray:
    """Parse PBM bytes into a uint8 grid (1 = black)."""
    data = bytes(data)
    magic = data[:2]
    if magic not in (b"P1", b"P4"):
        shown = magic.decode("ascii", "replace") if magic else "<empty>"
        raise PBMError(f"unsupported magic {shown!r}", 0)
    width, pos, wstart = _read_int(data, 2)
    height, pos, hstart = _read_int(data, pos)
    if width <= 0:
        raise PBMError(f"nonpositive width {width}", wstart)
    if height <= 0:
        raise PBMError(f"nonpositive height {height}", hstart)

    if magic == b"P1":
        bits = np.empty(width * height, dtype=np.uint8)
        filled = 0
        while filled < bits.size:
            pos = _skip_space_and_comments(data, pos)
            if pos >= len(data):
                raise PBMError(
                    f"truncated raster, got {filled} of {bits.size} pixels",
                    len(data))
            ch = data[pos:pos + 1]
            if ch not in (b"0", b"1"):
                raise PBMError(f"invalid raster character {ch!r}", pos)
            bits[filled] = ch == b"1"
            filled += 1
            pos += 1
        return bits.reshape(height, width)

    # P4: single whitespace byte, then packed rows
    if pos >= len(data) or data[pos:pos + 1] not in _WHITESPACE:
        raise PBMError("expected whitespace before packed raster", pos)
    pos += 1
    row_bytes = (width + 7) // 8
    need = row_bytes * height
    raster = data[pos:pos + need]
    if len(raster) < need:
        raise PBMError(
            f"truncated raster, got {len(raster)} of {need} bytes", len(data))
    rows = np.frombuffer(raster, dtype=np.uint8).reshape(height, row_bytes)
    bits = np.unpackbits(rows, axis=1)[:, :width]
    return np.ascontiguousarray(bits)


def write_pbm(img, variant: str = "P1") -> bytes:
    """Serialize a 0/1 grid; read_pbm round-trips both variants bit-exactly."""
    grid = (np.asarray(img) != 0).astype(np.uint8)
    if grid.ndim != 2:
        raise ValueError(f"image must be 2D, got shape {grid.shape}")
    height, width = grid.shape
    header = f"{variant}\n{width} {height}\n".encode("ascii")
    if variant == "P1":
        lines = []
        for row in grid:
            text = "".join("1" if v else "0" for v in row)
            # plain-format convention: keep lines at 70 chars or less
            lines.extend(text[i:i + 70] for i in range(0, len(text), 70))
        return header + ("\n".join(lines) + "\n").encode("ascii")
    if variant == "P4":
        packed = np.packbits(grid, axis=1)
        return header + packed.tobytes()
    raise ValueError(f"unsupported variant {variant!r}")
