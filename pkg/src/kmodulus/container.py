"""Bit-exact binary container for quotient images.

Layout of a ``KMM1`` stream (integers big-endian)::

    offset  size  field
    0       4     magic, the ASCII bytes "KMM1"
    4       1     format version, currently 1
    5       1     k (2..128)
    6       1     channels (1 or 3)
    7       4     width
    11      4     height
    15      -     quotient bitstream

The bitstream carries one ``bits_per_pixel(k)``-bit code per sample,
MSB-first, in row-major channel-interleaved order; the final byte is
zero-padded in its low bits.  Decoding is an exact inverse of encoding.
"""

from __future__ import annotations

import struct

from kmodulus._backend import kernels
from kmodulus.transform import (
    K_MAX,
    K_MIN,
    QuotientImage,
    bits_per_pixel,
    max_quotient,
)

MAGIC = b"KMM1"
VERSION = 1

_HEADER = struct.Struct(">4sBBBII")
HEADER_SIZE = _HEADER.size


class ContainerError(ValueError):
    """Raised when KMM1 data cannot be decoded."""


def payload_size(width: int, height: int, channels: int, k: int) -> int:
    """Byte length of the packed bitstream for the given geometry and k."""
    return (width * height * channels * bits_per_pixel(k) + 7) // 8


def pack(qimg: QuotientImage) -> bytes:
    """Serialize a quotient image to KMM1 bytes."""
    header = _HEADER.pack(
        MAGIC, VERSION, qimg.k, qimg.channels, qimg.width, qimg.height
    )
    return header + kernels.pack_bits(qimg.quotients, bits_per_pixel(qimg.k))


def unpack(data: bytes) -> QuotientImage:
    """Deserialize KMM1 bytes back into the exact quotient image.

    Raises :class:`ContainerError` with a distinct message for each way a
    stream can be unusable: wrong magic, unknown version, out-of-range k
    or channel count, bad geometry, wrong payload size, or a decoded
    quotient above the maximum for k.
    """
    data = bytes(data)
    if len(data) < HEADER_SIZE:
        raise ContainerError(
            f"header truncated: need {HEADER_SIZE} bytes, got {len(data)}"
        )
    magic, version, k, channels, width, height = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise ContainerError(f"bad magic {magic!r}, expected {MAGIC!r}")
    if version != VERSION:
        raise ContainerError(f"unsupported version {version}, expected {VERSION}")
    if not K_MIN <= k <= K_MAX:
        raise ContainerError(f"k={k} outside the supported range {K_MIN}..{K_MAX}")
    if channels not in (1, 3):
        raise ContainerError(f"channels must be 1 or 3, got {channels}")
    if width == 0 or height == 0:
        raise ContainerError(f"invalid image dimensions {width}x{height}")
    expected = payload_size(width, height, channels, k)
    payload = data[HEADER_SIZE:]
    if len(payload) < expected:
        raise ContainerError(
            f"payload truncated: expected {expected} bytes, got {len(payload)}"
        )
    if len(payload) > expected:
        raise ContainerError(
            f"trailing data: expected {expected} payload bytes, got {len(payload)}"
        )
    count = width * height * channels
    quotients = kernels.unpack_bits(payload, bits_per_pixel(k), count)
    if max(quotients) > max_quotient(k):
        raise ContainerError(
            f"corrupt stream: decoded quotient above {max_quotient(k)} for k={k}"
        )
    return QuotientImage(k, width, height, channels, quotients)
