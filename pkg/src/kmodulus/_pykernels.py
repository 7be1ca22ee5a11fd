"""Pure-Python kernels, the fallback for :mod:`kmodulus._kernels`.

Per-sample maps go through 256-entry tables and ``bytes.translate`` so
even the fallback stays usable on full-size images; the bit packer and
unpacker are plain accumulator loops.  Results must match the compiled
kernels bit for bit.
"""

from __future__ import annotations

from functools import lru_cache


@lru_cache(maxsize=None)
def _quantize_table(k: int) -> bytes:
    return bytes(min(255, k * ((2 * p + k) // (2 * k))) for p in range(256))


@lru_cache(maxsize=None)
def _quotient_table(k: int) -> bytes:
    return bytes((2 * p + k) // (2 * k) for p in range(256))


@lru_cache(maxsize=None)
def _reconstruct_table(k: int) -> bytes:
    return bytes(min(255, q * k) for q in range(256))


def quantize_buf(src: bytes, k: int) -> bytes:
    """Map every sample to the nearest multiple of k (ties up), saturated at 255."""
    return bytes(src).translate(_quantize_table(k))


def quotient_buf(src: bytes, k: int) -> bytes:
    """Map every sample p to the round-half-up quotient floor((2p + k) / 2k)."""
    return bytes(src).translate(_quotient_table(k))


def reconstruct_buf(quotients: bytes, k: int) -> bytes:
    """Map every quotient q to min(255, q * k)."""
    return bytes(quotients).translate(_reconstruct_table(k))


def pack_bits(values: bytes, bits: int) -> bytes:
    """Concatenate the low ``bits`` of each value, MSB-first, zero-padding the tail."""
    out = bytearray((len(values) * bits + 7) // 8)
    acc = 0
    nbits = 0
    pos = 0
    for v in values:
        acc = (acc << bits) | v
        nbits += bits
        while nbits >= 8:
            nbits -= 8
            out[pos] = (acc >> nbits) & 0xFF
            pos += 1
        acc &= (1 << nbits) - 1
    if nbits:
        out[pos] = (acc << (8 - nbits)) & 0xFF
    return bytes(out)


def unpack_bits(payload: bytes, bits: int, count: int) -> bytes:
    """Read ``count`` MSB-first ``bits``-wide codes back out of ``payload``."""
    if len(payload) * 8 < count * bits:
        raise ValueError("bitstream shorter than the requested code count")
    out = bytearray(count)
    mask = (1 << bits) - 1
    acc = 0
    nbits = 0
    pos = 0
    for i in range(count):
        while nbits < bits:
            acc = (acc << 8) | payload[pos]
            pos += 1
            nbits += 8
        nbits -= bits
        out[i] = (acc >> nbits) & mask
        acc &= (1 << nbits) - 1
    return bytes(out)


def sum_sq_diff(a: bytes, b: bytes) -> int:
    """Sum of squared sample differences between two equal-length buffers."""
    if len(a) != len(b):
        raise ValueError("buffers differ in length")
    return sum((x - y) * (x - y) for x, y in zip(a, b))
