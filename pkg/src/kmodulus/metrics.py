"""Objective fidelity and distribution measurements for 8-bit images."""

from __future__ import annotations

import math
from dataclasses import dataclass

from kmodulus._backend import kernels
from kmodulus.image import RasterImage
from kmodulus.transform import _checked_k

_PEAK_SQ = 255.0 * 255.0


@dataclass(frozen=True)
class QualityReport:
    """Pooled and per-channel fidelity between two equal-shape images.

    ``psnr_db`` is ``math.inf`` when the images are identical.
    """

    mse: float
    psnr_db: float
    per_channel_psnr: tuple[float, ...]


@dataclass(frozen=True)
class Histogram:
    """256-bin value counts per channel; ``total`` samples per channel."""

    counts: tuple[tuple[int, ...], ...]
    total: int

    def __post_init__(self) -> None:
        for c, chan in enumerate(self.counts):
            if len(chan) != 256:
                raise ValueError(f"channel {c} must have 256 bins, got {len(chan)}")
            if sum(chan) != self.total:
                raise ValueError(f"channel {c} counts sum to {sum(chan)}, not {self.total}")


def _require_same_shape(a: RasterImage, b: RasterImage) -> None:
    if (a.width, a.height, a.channels) != (b.width, b.height, b.channels):
        raise ValueError(
            f"shape mismatch: {a.width}x{a.height}x{a.channels} "
            f"vs {b.width}x{b.height}x{b.channels}"
        )


def _psnr_from_mse(m: float) -> float:
    return math.inf if m == 0 else 10.0 * math.log10(_PEAK_SQ / m)


def mse(a: RasterImage, b: RasterImage) -> float:
    """Mean squared error over all samples of both images jointly."""
    _require_same_shape(a, b)
    return kernels.sum_sq_diff(a.pixels, b.pixels) / a.sample_count


def psnr(a: RasterImage, b: RasterImage) -> float:
    """Peak signal-to-noise ratio 10*log10(255^2 / mse), in dB."""
    return _psnr_from_mse(mse(a, b))


def quality_report(a: RasterImage, b: RasterImage) -> QualityReport:
    """MSE and PSNR pooled over all channels, plus one PSNR per channel."""
    pooled = mse(a, b)
    per_channel = tuple(
        _psnr_from_mse(
            kernels.sum_sq_diff(a.channel(c), b.channel(c)) / (a.width * a.height)
        )
        for c in range(a.channels)
    )
    return QualityReport(pooled, _psnr_from_mse(pooled), per_channel)


def histogram(img: RasterImage) -> Histogram:
    """Count occurrences of each value 0..255 separately per channel."""
    counts = tuple(
        tuple(chan.count(v) for v in range(256))
        for chan in (img.channel(c) for c in range(img.channels))
    )
    return Histogram(counts, img.width * img.height)


def entropy(h: Histogram) -> tuple[float, ...]:
    """Shannon entropy in bits per sample, one value per channel.

    Zero bins contribute nothing (0 * log 0 is taken as 0).
    """
    if h.total <= 0:
        raise ValueError("empty histogram")
    result = []
    for chan in h.counts:
        e = 0.0
        for count in chan:
            if count:
                p = count / h.total
                e -= p * math.log2(p)
        result.append(e)
    return tuple(result)


def model_psnr(k: int) -> float:
    """PSNR the transform attains when sample residues mod k are uniform.

    The expected squared error is the mean of min(r, k-r)^2 over the k
    residues, which is the quantization noise floor natural photographs
    track closely.
    """
    k = _checked_k(k)
    noise = sum(min(r, k - r) ** 2 for r in range(k)) / k
    return _psnr_from_mse(noise)
