"""Pixel-value arithmetic: RGB<->CMY complement and the quarter/three-quarter/x4 scalings.

All maps are pure, total on 8-bit values, and applied elementwise with numpy.
Fractional scalings use floor division so a reduced plane fits in 6 bits.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np


class Channel(Enum):
    C = "C"
    M = "M"
    Y = "Y"


CHANNELS = (Channel.C, Channel.M, Channel.Y)

# column of an (h, w, 3) RGB array holding the complement of each channel
RGB_INDEX = {Channel.C: 0, Channel.M: 1, Channel.Y: 2}


@dataclass(frozen=True, eq=False)
class RgbImage:
    """A width x height grid of 8-bit R,G,B triples."""

    pixels: np.ndarray  # (height, width, 3) uint8

    def __post_init__(self):
        p = self.pixels
        if not isinstance(p, np.ndarray) or p.dtype != np.uint8:
            raise ValueError("pixels must be a uint8 numpy array")
        if p.ndim != 3 or p.shape[2] != 3:
            raise ValueError(f"pixels must have shape (height, width, 3), got {p.shape}")
        if p.shape[0] < 1 or p.shape[1] < 1:
            raise ValueError("image must be at least 1x1")

    @property
    def width(self) -> int:
        return self.pixels.shape[1]

    @property
    def height(self) -> int:
        return self.pixels.shape[0]

    @classmethod
    def from_array(cls, arr) -> "RgbImage":
        return cls(np.ascontiguousarray(np.asarray(arr, dtype=np.uint8)))

    def __eq__(self, other) -> bool:
        return isinstance(other, RgbImage) and np.array_equal(self.pixels, other.pixels)


@dataclass(frozen=True, eq=False)
class ChannelPlane:
    """One 8-bit plane of a single primitive color channel."""

    values: np.ndarray  # (height, width) uint8
    role: Channel

    def __post_init__(self):
        v = self.values
        if not isinstance(v, np.ndarray) or v.dtype != np.uint8:
            raise ValueError("values must be a uint8 numpy array")
        if v.ndim != 2:
            raise ValueError(f"values must have shape (height, width), got {v.shape}")
        if not isinstance(self.role, Channel):
            raise ValueError(f"role must be a Channel, got {self.role!r}")

    @property
    def width(self) -> int:
        return self.values.shape[1]

    @property
    def height(self) -> int:
        return self.values.shape[0]

    @classmethod
    def from_array(cls, arr, role: Channel) -> "ChannelPlane":
        return cls(np.ascontiguousarray(np.asarray(arr, dtype=np.uint8)), role)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ChannelPlane)
            and self.role is other.role
            and np.array_equal(self.values, other.values)
        )


@dataclass(frozen=True, eq=False)
class CmyPlanes:
    """The three primitive color planes of one image."""

    c: ChannelPlane
    m: ChannelPlane
    y: ChannelPlane

    def __post_init__(self):
        roles = (self.c.role, self.m.role, self.y.role)
        if roles != CHANNELS:
            raise ValueError(f"plane roles must be (C, M, Y), got {roles}")
        shapes = {p.values.shape for p in (self.c, self.m, self.y)}
        if len(shapes) != 1:
            raise ValueError(f"planes must share one shape, got {shapes}")

    def plane(self, channel: Channel) -> ChannelPlane:
        return {Channel.C: self.c, Channel.M: self.m, Channel.Y: self.y}[channel]

    def __iter__(self):
        return iter((self.c, self.m, self.y))

    def __eq__(self, other) -> bool:
        return isinstance(other, CmyPlanes) and all(a == b for a, b in zip(self, other))


def rgb_to_cmy(img: RgbImage) -> CmyPlanes:
    """Decompose an RGB image into its C, M, Y planes (8-bit complement per channel)."""
    inv = 255 - img.pixels
    return CmyPlanes(
        ChannelPlane(np.ascontiguousarray(inv[:, :, 0]), Channel.C),
        ChannelPlane(np.ascontiguousarray(inv[:, :, 1]), Channel.M),
        ChannelPlane(np.ascontiguousarray(inv[:, :, 2]), Channel.Y),
    )


def cmy_to_rgb(planes: CmyPlanes) -> RgbImage:
    """Recombine C, M, Y planes into an RGB image; exact inverse of rgb_to_cmy."""
    return RgbImage(np.stack([255 - p.values for p in planes], axis=-1))


def reduce_quarter(plane: ChannelPlane) -> ChannelPlane:
    """Map each value v to floor(v / 4); output fits in [0, 63]."""
    return ChannelPlane(plane.values >> 2, plane.role)


def scale_three_quarter(plane: ChannelPlane) -> ChannelPlane:
    """Map each value v to floor(3 v / 4); output fits in [0, 191]."""
    # 3 * 255 overflows uint8, widen first
    scaled = (plane.values.astype(np.uint16) * 3) // 4
    return ChannelPlane(scaled.astype(np.uint8), plane.role)


def rescale_x4(plane: ChannelPlane) -> ChannelPlane:
    """Map each value v to min(4 v, 255)."""
    widened = plane.values.astype(np.uint16) * 4
    return ChannelPlane(np.minimum(widened, 255).astype(np.uint8), plane.role)
