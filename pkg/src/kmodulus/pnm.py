"""Binary PNM (PGM ``P5``, PPM ``P6``) decoding and encoding, 8-bit only.

The reader accepts the usual header freedoms: any run of whitespace
between tokens and ``#`` comment lines.  The writer always emits the
canonical form ``P5\\n<width> <height>\\n255\\n<payload>`` so output files
are byte-stable.
"""

from __future__ import annotations

from kmodulus.image import RasterImage

_WHITESPACE = b" \t\n\r\x0b\x0c"


class PnmError(ValueError):
    """Raised for malformed or unsupported PNM data."""


def _skip_space(data: bytes, pos: int) -> int:
    # Whitespace and '#' comments (to end of line) may precede any header token.
    n = len(data)
    while pos < n:
        b = data[pos]
        if b in _WHITESPACE:
            pos += 1
        elif b == 0x23:  # '#'
            while pos < n and data[pos] not in b"\r\n":
                pos += 1
        else:
            break
    return pos


def _read_int(data: bytes, pos: int, what: str) -> tuple[int, int]:
    pos = _skip_space(data, pos)
    start = pos
    n = len(data)
    while pos < n and 0x30 <= data[pos] <= 0x39:
        pos += 1
    if pos == start:
        raise PnmError(f"malformed header: expected {what}")
    return int(data[start:pos]), pos


def read_pnm(data: bytes) -> RasterImage:
    """Decode a binary PGM/PPM file.

    Only ``P5``/``P6`` with maxval 255 are supported.  Raises
    :class:`PnmError` on any malformed or unsupported input.
    """
    data = bytes(data)
    magic = data[:2]
    if magic not in (b"P5", b"P6"):
        raise PnmError(f"unsupported magic {magic!r}, expected binary P5 or P6")
    channels = 1 if magic == b"P5" else 3
    if len(data) < 3 or data[2] not in _WHITESPACE + b"#":
        raise PnmError("malformed header: magic not followed by whitespace")
    width, pos = _read_int(data, 2, "width")
    height, pos = _read_int(data, pos, "height")
    maxval, pos = _read_int(data, pos, "maxval")
    if width < 1 or height < 1:
        raise PnmError(f"invalid image dimensions {width}x{height}")
    if maxval != 255:
        raise PnmError(f"unsupported maxval {maxval}, only 255 (8-bit) is handled")
    # Exactly one whitespace byte separates the maxval from the raw payload.
    if pos >= len(data) or data[pos] not in _WHITESPACE:
        raise PnmError("malformed header: expected whitespace before pixel payload")
    pos += 1
    expected = width * height * channels
    payload = data[pos : pos + expected]
    if len(payload) < expected:
        raise PnmError(
            f"pixel payload truncated: expected {expected} bytes, got {len(payload)}"
        )
    return RasterImage(width, height, channels, payload)


def write_pnm(img: RasterImage) -> bytes:
    """Encode ``img`` as canonical binary PGM (1 channel) or PPM (3 channels)."""
    magic = b"P5" if img.channels == 1 else b"P6"
    return b"%s\n%d %d\n255\n" % (magic, img.width, img.height) + img.pixels
