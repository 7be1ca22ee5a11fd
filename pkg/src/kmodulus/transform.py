"""Quantization of 8-bit samples onto multiples of an integer k.

Every sample ``p`` in 0..255 maps to the nearest multiple of ``k`` with
ties rounding up, saturated to the 8-bit ceiling::

    q  = floor((2p + k) / 2k)      round-half-up of p / k
    p' = min(255, q * k)

The quotient ``q`` is the compact representation: it never exceeds
``max_quotient(k)`` and therefore fits in ``bits_per_pixel(k)`` bits.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass

from kmodulus._backend import kernels
from kmodulus.image import RasterImage

K_MIN = 2
K_MAX = 128


def _checked_k(k: int) -> int:
    k = operator.index(k)
    if not K_MIN <= k <= K_MAX:
        raise ValueError(f"k must be in {K_MIN}..{K_MAX}, got {k}")
    return k


def _checked_sample(p: int) -> int:
    p = operator.index(p)
    if not 0 <= p <= 255:
        raise ValueError(f"sample value must be in 0..255, got {p}")
    return p


def max_quotient(k: int) -> int:
    """Largest reachable quotient: round-half-up of 255/k."""
    k = _checked_k(k)
    return (510 + k) // (2 * k)


def levels(k: int) -> int:
    """Number of distinct output levels, floor(256/k) + 1."""
    k = _checked_k(k)
    return 256 // k + 1


def bits_per_pixel(k: int) -> int:
    """Bits needed to store any quotient: the bit length of max_quotient(k)."""
    return max_quotient(k).bit_length()


def to_quotient(p: int, k: int) -> int:
    """Round-half-up quotient of p / k."""
    p = _checked_sample(p)
    k = _checked_k(k)
    return (2 * p + k) // (2 * k)


def from_quotient(q: int, k: int) -> int:
    """Reconstructed sample min(255, q * k)."""
    k = _checked_k(k)
    q = operator.index(q)
    if not 0 <= q <= max_quotient(k):
        raise ValueError(f"quotient must be in 0..{max_quotient(k)} for k={k}, got {q}")
    return min(255, q * k)


def quantize_pixel(p: int, k: int) -> int:
    """Nearest multiple of k to p (ties up), saturated at 255."""
    return from_quotient(to_quotient(p, k), k)


@dataclass(frozen=True)
class QuotientImage:
    """Per-sample round-half-up quotients of an image divided by ``k``.

    Geometry mirrors :class:`RasterImage`; every quotient lies in
    ``0..max_quotient(k)``.
    """

    k: int
    width: int
    height: int
    channels: int
    quotients: bytes

    def __post_init__(self) -> None:
        _checked_k(self.k)
        if self.width < 1 or self.height < 1:
            raise ValueError(
                f"image dimensions must be at least 1x1, got {self.width}x{self.height}"
            )
        if self.channels not in (1, 3):
            raise ValueError(f"channels must be 1 or 3, got {self.channels}")
        object.__setattr__(self, "quotients", bytes(self.quotients))
        expected = self.width * self.height * self.channels
        if len(self.quotients) != expected:
            raise ValueError(
                f"expected {expected} quotients for "
                f"{self.width}x{self.height}x{self.channels}, got {len(self.quotients)}"
            )
        top = max_quotient(self.k)
        if max(self.quotients) > top:
            raise ValueError(f"quotient exceeds {top}, the maximum for k={self.k}")

    @property
    def sample_count(self) -> int:
        return self.width * self.height * self.channels


def transform_image(img: RasterImage, k: int) -> RasterImage:
    """Quantize every sample of ``img`` independently; geometry is preserved."""
    k = _checked_k(k)
    return RasterImage(
        img.width, img.height, img.channels, kernels.quantize_buf(img.pixels, k)
    )


def quotient_image(img: RasterImage, k: int) -> QuotientImage:
    """Element-wise round-half-up division of ``img`` by ``k``."""
    k = _checked_k(k)
    return QuotientImage(
        k, img.width, img.height, img.channels, kernels.quotient_buf(img.pixels, k)
    )


def reconstruct(qimg: QuotientImage) -> RasterImage:
    """Multiply quotients back by ``k``, saturating at 255.

    ``reconstruct(quotient_image(img, k))`` equals ``transform_image(img, k)``.
    """
    return RasterImage(
        qimg.width,
        qimg.height,
        qimg.channels,
        kernels.reconstruct_buf(qimg.quotients, qimg.k),
    )
