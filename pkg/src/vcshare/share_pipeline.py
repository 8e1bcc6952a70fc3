"""Share generation and secret recovery.

Per channel, the share plane is `reduce_quarter(secret) OR masked
scale_three_quarter(cover)`.  Two modes pin down what "masked" and the
recovery step mean:

* ``PAPER_LITERAL`` ORs the full scaled cover value in and removes it with
  the complement ``255 - floor(3 s / 4)`` applied to the share pixel.  The OR
  is not invertible under this reading, so reconstruction is lossy by
  construction and is only reported on, never asserted.
* ``SEPARABLE`` masks the scaled cover to its top two bits (0xC0) so the
  secret's 6-bit payload and the cover occupy disjoint bit fields.  Removal
  strips the cover exactly and the round trip is exact up to the 2-bit
  quantization, a per-channel error of at most 3.

Either way the share plane has the secret's dimensions: there is no pixel
expansion.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import kernels
from .color_model import (
    CHANNELS,
    RGB_INDEX,
    Channel,
    ChannelPlane,
    CmyPlanes,
    RgbImage,
    cmy_to_rgb,
    reduce_quarter,
    rgb_to_cmy,
)
from .cover_select import CoverAssignment, assign_covers
from .errors import (
    DimensionMismatchError,
    DuplicateCoverError,
    ModeMismatchError,
    SizeRuleError,
)


class ShareMode(Enum):
    PAPER_LITERAL = "paper"
    SEPARABLE = "separable"


# separable mode: cover keeps the top two bits, the secret the low six
COVER_BITS = 0xC0
SECRET_BITS = 0x3F


@dataclass(frozen=True, eq=False)
class Share:
    """One transparency: the mixed plane plus the rendered, viewable image."""

    role: Channel
    cover_index: int
    mode: ShareMode
    plane: ChannelPlane
    rendered: RgbImage

    def __post_init__(self):
        if self.plane.role is not self.role:
            raise ValueError("plane role must match the share role")
        if self.plane.values.shape != self.rendered.pixels.shape[:2]:
            raise DimensionMismatchError("rendered image must match the plane size")


@dataclass(frozen=True, eq=False)
class ShareSet:
    """Exactly three shares with distinct roles, in C, M, Y order."""

    shares: tuple
    assignment: CoverAssignment
    mode: ShareMode

    def __post_init__(self):
        if tuple(s.role for s in self.shares) != CHANNELS:
            raise ValueError("shares must be ordered C, M, Y with distinct roles")
        for share in self.shares:
            if share.mode is not self.mode:
                raise ModeMismatchError(
                    f"share {share.role.value} was generated in mode {share.mode.value}, "
                    f"set is {self.mode.value}"
                )
        shapes = {s.plane.values.shape for s in self.shares}
        if len(shapes) != 1:
            raise DimensionMismatchError(f"share planes differ in size: {shapes}")


def mix_pixel(p_reduced: int, c_scaled: int) -> int:
    """Bitwise OR of a reduced secret value and a scaled cover value."""
    if not 0 <= p_reduced <= 63:
        raise ValueError(f"reduced secret value {p_reduced} outside [0, 63]")
    if not 0 <= c_scaled <= 255:
        raise ValueError(f"cover value {c_scaled} outside [0, 255]")
    return p_reduced | c_scaled


def _check_covers(secret: RgbImage, covers) -> None:
    if len(covers) != 3:
        raise ValueError(f"expected exactly 3 covers, got {len(covers)}")
    for a in range(3):
        for b in range(a + 1, 3):
            if np.array_equal(covers[a].pixels, covers[b].pixels):
                raise DuplicateCoverError(
                    f"covers {a} and {b} have identical content; three distinct "
                    "images are required"
                )
    for k, cover in enumerate(covers):
        if cover.width < secret.width or cover.height < secret.height:
            raise SizeRuleError(
                f"cover {k} is {cover.width}x{cover.height}, smaller than the "
                f"secret's {secret.width}x{secret.height}"
            )


def generate_shares(secret: RgbImage, covers, mode: ShareMode = ShareMode.SEPARABLE) -> ShareSet:
    """Encrypt the secret into three shares, one primitive channel per cover.

    Covers larger than the secret are cropped to its size at the top-left
    corner.  The rendered share is the cropped cover with the carried channel
    replaced by the mixed plane (through the complement); the other two
    channels pass through untouched.
    """
    _check_covers(secret, covers)
    h, w = secret.height, secret.width
    cropped = [RgbImage(np.ascontiguousarray(c.pixels[:h, :w])) for c in covers]

    secret_cmy = rgb_to_cmy(secret)
    reduced = CmyPlanes(*(reduce_quarter(p) for p in secret_cmy))
    assignment = assign_covers(reduced, cropped)

    cover_mask = 0xFF if mode is ShareMode.PAPER_LITERAL else COVER_BITS
    shares = []
    for ch in CHANNELS:
        k = assignment.mapping[ch]
        cover = cropped[k]
        cover_plane = rgb_to_cmy(cover).plane(ch)
        mixed = kernels.mix_channel(secret_cmy.plane(ch).values, cover_plane.values, cover_mask)
        rendered = cover.pixels.copy()
        rendered[:, :, RGB_INDEX[ch]] = 255 - mixed
        shares.append(
            Share(
                role=ch,
                cover_index=k,
                mode=mode,
                plane=ChannelPlane(mixed, ch),
                rendered=RgbImage(rendered),
            )
        )
    return ShareSet(shares=tuple(shares), assignment=assignment, mode=mode)


def remove_cover(share: Share) -> ChannelPlane:
    """Strip the cover contribution from one share plane.

    Literal mode applies ``255 - floor(3 s / 4)`` to the share pixel;
    separable mode keeps only the low six bits, which hold the reduced secret
    exactly.
    """
    s = share.plane.values
    if share.mode is ShareMode.PAPER_LITERAL:
        removed = (255 - (s.astype(np.uint16) * 3) // 4).astype(np.uint8)
    else:
        removed = s & np.uint8(SECRET_BITS)
    return ChannelPlane(removed, share.role)


def recover_from_planes(planes: CmyPlanes, mode: ShareMode) -> RgbImage:
    """Run cover removal and the x4 rescale on three share planes, then recombine."""
    literal = mode is ShareMode.PAPER_LITERAL
    recovered = CmyPlanes(
        *(ChannelPlane(kernels.recover_channel(p.values, literal), p.role) for p in planes)
    )
    return cmy_to_rgb(recovered)


def recover_secret(share_set: ShareSet) -> RgbImage:
    """Reconstruct the secret image from a complete share set."""
    planes = CmyPlanes(*(share.plane for share in share_set.shares))
    return recover_from_planes(planes, share_set.mode)


def subtractive_stack(images) -> RgbImage:
    """Simulate physically stacking transparencies: per-channel minimum."""
    if len(images) != 3:
        raise ValueError(f"expected exactly 3 images, got {len(images)}")
    shapes = {img.pixels.shape for img in images}
    if len(shapes) != 1:
        raise DimensionMismatchError(f"stacked images differ in size: {shapes}")
    return RgbImage(np.minimum.reduce([img.pixels for img in images]))
