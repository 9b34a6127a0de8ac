import numpy as np
import pytest

from digitopo.pbm import PBMError, read_pbm, write_pbm
from tests.conftest import random_images


def test_read_p1_basic():
    img = read_pbm(b"P1 2 2 1 0 0 1")
    assert img.shape == (2, 2)
    assert img[0, 0] == 1 and img[1, 1] == 1
    assert img[0, 1] == 0 and img[1, 0] == 0


def test_read_p1_unseparated_bits_and_comments():
    data = b"P1\n# a comment\n3 2\n101\n# raster comment\n010\n"
    img = read_pbm(data)
    assert img.tolist() == [[1, 0, 1], [0, 1, 0]]


def test_read_p4_msb_first():
    img = read_pbm(b"P4\n8 1\n\x80")
    assert img.tolist() == [[1, 0, 0, 0, 0, 0, 0, 0]]


def test_read_p4_row_padding_ignored():
    # 3 wide: each row occupies one byte, low 5 bits are padding
    img = read_pbm(b"P4\n3 2\n" + bytes([0b10100000, 0b01011111]))
    assert img.tolist() == [[1, 0, 1], [0, 1, 0]]


def test_unsupported_magic():
    with pytest.raises(PBMError, match="unsupported magic"):
        read_pbm(b"P5\n2 2\n255\n\x00\x00\x00\x00")
    with pytest.raises(PBMError, match="unsupported magic"):
        read_pbm(b"")


def test_nonpositive_dimensions():
    with pytest.raises(PBMError, match="width"):
        read_pbm(b"P1 0 2 ")
    with pytest.raises(PBMError, match="height"):
        read_pbm(b"P1 2 0 ")


def test_truncated_raster_reports_offset():
    with pytest.raises(PBMError, match="truncated") as exc:
        read_pbm(b"P1 2 2 1 0")
    assert exc.value.offset == 10
    data = b"P4\n8 2\n\xff"
    with pytest.raises(PBMError, match="truncated") as exc:
        read_pbm(data)
    assert exc.value.offset == len(data)


def test_bad_raster_character():
    with pytest.raises(PBMError, match="invalid raster character"):
        read_pbm(b"P1 2 1 1 2")


def test_write_p1_single_pixel():
    assert write_pbm(np.array([[1]]), "P1") == b"P1\n1 1\n1\n"
    assert write_pbm(np.array([[0]]), "P1") == b"P1\n1 1\n0\n"


def test_write_p1_wraps_long_lines():
    img = np.ones((1, 150), dtype=np.uint8)
    data = write_pbm(img, "P1")
    assert all(len(line) <= 70 for line in data.decode().splitlines())
    assert np.array_equal(read_pbm(data), img)


def test_write_rejects_bad_variant_and_shape():
    with pytest.raises(ValueError):
        write_pbm(np.ones((2, 2)), "P7")
    with pytest.raises(ValueError):
        write_pbm(np.ones(4), "P1")


@pytest.mark.parametrize("variant", ["P1", "P4"])
def test_round_trip_random_images(variant):
    for img in random_images(99, 40, width=16, height=16):
        assert np.array_equal(read_pbm(write_pbm(img, variant)), img)


@pytest.mark.parametrize("variant", ["P1", "P4"])
def test_round_trip_odd_widths(variant):
    for width in (1, 3, 7, 8, 9, 17):
        for img in random_images(width, 3, width=width, height=5):
            assert np.array_equal(read_pbm(write_pbm(img, variant)), img)
