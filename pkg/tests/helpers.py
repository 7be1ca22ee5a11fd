"""Shared test utilities: random corpora, a deterministic photographic
scene, and independent oracles the library code never touches."""

from __future__ import annotations

import math
import random

from hypothesis import strategies as st

from kmodulus.image import RasterImage
from kmodulus.transform import K_MAX, K_MIN


def random_image(rng: random.Random, max_side: int = 64) -> RasterImage:
    w = rng.randint(1, max_side)
    h = rng.randint(1, max_side)
    ch = rng.choice((1, 3))
    return RasterImage(w, h, ch, rng.randbytes(w * h * ch))


def synthetic_photo(width: int = 512, height: int = 512, seed: int = 91) -> RasterImage:
    """Photograph-like grayscale scene: smooth shading plus film-like grain.

    Deterministic for a given seed, so tests that freeze expectations on it
    are stable.
    """
    rng = random.Random(seed)
    px = bytearray(width * height)
    i = 0
    for y in range(height):
        sy = math.sin(2 * math.pi * y / 137.0)
        for x in range(width):
            base = (
                128.0
                + 72.0 * math.sin(2 * math.pi * x / 181.0) * sy
                + 34.0 * math.sin(2 * math.pi * (x + 2 * y) / 59.0)
            )
            v = base + rng.gauss(0.0, 9.0)
            px[i] = min(255, max(0, round(v)))
            i += 1
    return RasterImage(width, height, 1, bytes(px))


def brute_quantize(p: int, k: int) -> int:
    """Oracle: scan all multiples of k for the closest to p (ties upward),
    then saturate at 255.  Deliberately exhaustive, shares nothing with the
    library's closed form."""
    best = 0
    best_d = p
    for q in range(256 // k + 2):
        m = q * k
        d = abs(p - m)
        if d < best_d or (d == best_d and m > best):
            best, best_d = m, d
    return min(255, best)


def oracle_psnr(mean_sq_err: float) -> float:
    """Oracle: PSNR by direct formula evaluation."""
    return 10.0 * math.log10(255.0**2 / mean_sq_err)


# Published reference table for k = 2..20: largest output level
# (floor(256/k), so the level count is that plus one) and the stored
# bit width per sample.
REFERENCE_RANGE_MAX = {
    2: 128, 3: 85, 4: 64, 5: 51, 6: 42, 7: 36, 8: 32, 9: 28, 10: 25,
    11: 23, 12: 21, 13: 19, 14: 18, 15: 17, 16: 16, 17: 15, 18: 14,
    19: 13, 20: 12,
}
REFERENCE_BITS = {
    2: 8, 3: 7, 4: 7, 5: 6, 6: 6, 7: 6, 8: 6, 9: 5, 10: 5, 11: 5,
    12: 5, 13: 5, 14: 5, 15: 5, 16: 5, 17: 4, 18: 4, 19: 4, 20: 4,
}

# Published PSNR measurements (dB) of the transform on a standard
# 512x512 grayscale photograph.  The exact source image is not
# available, so comparisons use a +/- 1.5 dB band.
REFERENCE_PSNR_DB = {
    2: 50.7787, 3: 49.5941, 5: 44.7639, 7: 41.7680,
    10: 38.4859, 15: 35.0014, 20: 32.5316,
}


@st.composite
def raster_images(draw, max_side: int = 12) -> RasterImage:
    w = draw(st.integers(1, max_side))
    h = draw(st.integers(1, max_side))
    ch = draw(st.sampled_from((1, 3)))
    pixels = draw(st.binary(min_size=w * h * ch, max_size=w * h * ch))
    return RasterImage(w, h, ch, pixels)


k_values = st.integers(K_MIN, K_MAX)
