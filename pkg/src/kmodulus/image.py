"""In-memory 8-bit raster images."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class RasterImage:
    """An 8-bit raster image, row-major and channel-interleaved.

    ``pixels`` holds exactly ``width * height * channels`` samples;
    grayscale images have one channel, RGB images three.  Storing samples
    as ``bytes`` keeps every value in 0..255 by construction.
    """

    width: int
    height: int
    channels: int
    pixels: bytes

    def __post_init__(self) -> None:
        if self.width < 1 or self.height < 1:
            raise ValueError(
                f"image dimensions must be at least 1x1, got {self.width}x{self.height}"
            )
        if self.channels not in (1, 3):
            raise ValueError(f"channels must be 1 or 3, got {self.channels}")
        object.__setattr__(self, "pixels", bytes(self.pixels))
        expected = self.width * self.height * self.channels
        if len(self.pixels) != expected:
            raise ValueError(
                f"expected {expected} samples for "
                f"{self.width}x{self.height}x{self.channels}, got {len(self.pixels)}"
            )

    @property
    def sample_count(self) -> int:
        return self.width * self.height * self.channels

    def channel(self, c: int) -> bytes:
        """Samples of channel ``c``, deinterleaved."""
        if not 0 <= c < self.channels:
            raise IndexError(f"channel {c} out of range for {self.channels}-channel image")
        return self.pixels[c :: self.channels]
