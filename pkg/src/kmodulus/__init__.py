"""Quantize 8-bit images onto multiples of an integer k.

The transform replaces every sample with its nearest multiple of k
(ties round up, products above 255 saturate), which shrinks the value
alphabet enough that each sample fits in ``bits_per_pixel(k)`` bits.
:func:`pack` and :func:`unpack` move the quotient representation in and
out of the bit-exact ``KMM1`` container; :mod:`kmodulus.metrics` measures
the damage.
"""

from kmodulus._backend import BACKEND
from kmodulus.container import (
    HEADER_SIZE,
    MAGIC,
    VERSION,
    ContainerError,
    pack,
    payload_size,
    unpack,
)
from kmodulus.image import RasterImage
from kmodulus.metrics import (
    Histogram,
    QualityReport,
    entropy,
    histogram,
    model_psnr,
    mse,
    psnr,
    quality_report,
)
from kmodulus.pnm import PnmError, read_pnm, write_pnm
from kmodulus.transform import (
    K_MAX,
    K_MIN,
    QuotientImage,
    bits_per_pixel,
    from_quotient,
    levels,
    max_quotient,
    quantize_pixel,
    quotient_image,
    reconstruct,
    to_quotient,
    transform_image,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ContainerError",
    "HEADER_SIZE",
    "Histogram",
    "K_MAX",
    "K_MIN",
    "MAGIC",
    "PnmError",
    "QualityReport",
    "QuotientImage",
    "RasterImage",
    "VERSION",
    "bits_per_pixel",
    "entropy",
    "from_quotient",
    "histogram",
    "levels",
    "max_quotient",
    "model_psnr",
    "mse",
    "pack",
    "payload_size",
    "psnr",
    "quality_report",
    "quantize_pixel",
    "quotient_image",
    "read_pnm",
    "reconstruct",
    "to_quotient",
    "transform_image",
    "unpack",
    "write_pnm",
]
