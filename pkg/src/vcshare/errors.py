"""Exception types shared across the toolkit."""


class VcShareError(Exception):
    """Base class for every error this package raises on purpose."""


class DimensionMismatchError(VcShareError):
    """Two images or planes that must agree in size do not."""


class SizeRuleError(VcShareError):
    """A cover image is smaller than the secret in at least one axis."""


class DuplicateCoverError(VcShareError):
    """Two of the three cover images have identical pixel content."""


class ModeMismatchError(VcShareError):
    """Shares generated under different modes were combined."""


class SidecarError(VcShareError):
    """The share metadata sidecar is missing, unreadable, or incomplete."""


class InvalidBlockError(VcShareError):
    """A 2x2 block in a stacked image has a subpixel weight no valid share pair produces."""

    def __init__(self, block_x: int, block_y: int, weight: int):
        super().__init__(
            f"block at ({block_x}, {block_y}) has {weight} black subpixels, expected 2 or 4"
        )
        self.block_x = block_x
        self.block_y = block_y
        self.weight = weight
