"""Classic (2,2) black-and-white visual cryptography.

Every secret pixel becomes a 2x2 block in each of two shares.  A share block
always holds exactly two black subpixels, drawn uniformly from the six such
patterns, so one share alone is indistinguishable from noise.  The second
share repeats the block for a white secret pixel and complements it for a
black one; OR-stacking then yields weight 2 (reads gray) or weight 4 (solid
black).
"""

import itertools
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DimensionMismatchError, InvalidBlockError

# recorded next to the seed wherever a share pair is persisted
RNG_ALGORITHM = "numpy-pcg64"

EXPANSION = 2


def _two_black_patterns() -> np.ndarray:
    pats = []
    for a, b in itertools.combinations(range(4), 2):
        flat = np.zeros(4, dtype=np.bool_)
        flat[[a, b]] = True
        pats.append(flat.reshape(2, 2))
    return np.array(pats)


# all C(4,2) = 6 placements of two black subpixels in a 2x2 block
PATTERNS = _two_black_patterns()


@dataclass(frozen=True, eq=False)
class BitImage:
    """Black-and-white bitmap; True means black."""

    bits: np.ndarray  # (height, width) bool

    def __post_init__(self):
        b = self.bits
        if not isinstance(b, np.ndarray) or b.dtype != np.bool_ or b.ndim != 2:
            raise ValueError("bits must be a 2-d bool numpy array")
        if b.shape[0] < 1 or b.shape[1] < 1:
            raise ValueError("bitmap must be at least 1x1")

    @property
    def width(self) -> int:
        return self.bits.shape[1]

    @property
    def height(self) -> int:
        return self.bits.shape[0]

    @classmethod
    def from_array(cls, arr) -> "BitImage":
        return cls(np.ascontiguousarray(np.asarray(arr, dtype=np.bool_)))

    def __eq__(self, other) -> bool:
        return isinstance(other, BitImage) and np.array_equal(self.bits, other.bits)


@dataclass(frozen=True, eq=False)
class ClassicSharePair:
    """Two 2x-expanded shares plus the seed that produced them."""

    share1: BitImage
    share2: BitImage
    seed: int

    def __post_init__(self):
        if self.share1.bits.shape != self.share2.bits.shape:
            raise DimensionMismatchError("the two shares must have identical size")


def encrypt_bw(secret: BitImage, seed: int) -> ClassicSharePair:
    """Split a binary secret into two 2x-expanded complementary-pattern shares.

    Pattern choices are drawn with numpy's PCG64 generator in row-major
    order, so a (secret, seed) pair always produces the same share pair.
    """
    rng = np.random.default_rng(seed)
    idx = rng.integers(0, len(PATTERNS), size=secret.bits.shape, dtype=np.uint8)
    share1, share2 = kernels.expand_classic(idx, secret.bits, PATTERNS)
    return ClassicSharePair(BitImage(share1), BitImage(share2), seed)


def superimpose(a: BitImage, b: BitImage) -> BitImage:
    """Stack two transparencies: pixel-wise OR, black dominates."""
    if a.bits.shape != b.bits.shape:
        raise DimensionMismatchError(
            f"cannot superimpose {a.width}x{a.height} onto {b.width}x{b.height}"
        )
    return BitImage(a.bits | b.bits)


def decode_by_contrast(stacked: BitImage) -> BitImage:
    """Machine decoding of a stacked pair: weight-4 blocks are black, weight-2 white.

    Any other block weight cannot come from a valid share pair and raises
    InvalidBlockError naming the first offending block.
    """
    if stacked.height % 2 or stacked.width % 2:
        raise DimensionMismatchError(
            f"stacked image is {stacked.width}x{stacked.height}, dimensions must be even"
        )
    weights = kernels.block_weights(stacked.bits)
    bad = np.argwhere((weights != 2) & (weights != 4))
    if bad.size:
        i, j = bad[0]
        raise InvalidBlockError(int(j), int(i), int(weights[i, j]))
    return BitImage(weights == 4)
