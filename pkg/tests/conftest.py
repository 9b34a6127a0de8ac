import numpy as np
import pytest

from digitopo._kernels import backend_numba, backend_numpy


@pytest.fixture(params=[backend_numba, backend_numpy],
                ids=lambda m: m.NAME)
def kernel_backend(request):
    """Run a test against both kernel implementations."""
    return request.param


@pytest.fixture
def use_numpy_kernels(monkeypatch):
    """Route the package's kernel calls through the pure-numpy backend."""
    import digitopo._kernels as k
    monkeypatch.setattr(k, "label_grid", backend_numpy.label_grid)
    monkeypatch.setattr(k, "config_map", backend_numpy.config_map)
    monkeypatch.setattr(k, "thin_pass", backend_numpy.thin_pass)


def random_images(seed, count, width=16, height=16, p=0.5):
    rng = np.random.default_rng(seed)
    return [(rng.random((height, width)) < p).astype(np.uint8)
            for _ in range(count)]


def thinning_corpus(seed=2024):
    """Fixture images: solid blocks, rings, L-shapes, random noise."""
    images = []
    for size in range(3, 11):
        images.append((f"block{size}", np.ones((size, size), dtype=np.uint8)))
    for size in (5, 6, 8):
        ring = np.ones((size, size), dtype=np.uint8)
        ring[1:-1, 1:-1] = 0
        images.append((f"ring{size}", ring))
    ell = np.zeros((9, 7), dtype=np.uint8)
    ell[:, :3] = 1
    ell[-3:, :] = 1
    images.append(("L9x7", ell))
    ell2 = np.zeros((6, 12), dtype=np.uint8)
    ell2[:2, :] = 1
    ell2[:, :2] = 1
    images.append(("L6x12", ell2))
    for i, img in enumerate(random_images(seed, 5, width=32, height=32)):
        images.append((f"random32_{i}", img))
    return images
