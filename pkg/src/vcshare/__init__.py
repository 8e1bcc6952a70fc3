"""vcshare: color visual cryptography with meaningful cover-image shares.

A 24-bit secret image is split into its C, M, Y channels; each channel,
reduced to a 6-bit payload, is OR-mixed into the matching channel of a cover
image chosen by minimum pixel difference.  Recovery strips the covers,
rescales, and recombines the channels at the secret's original size, with
no pixel expansion.  A classic (2,2) black-and-white scheme with 2x2
expansion is included for reference, along with quality and leakage metrics
and a bit-exact 24-bpp BMP codec.
"""

from .bmp_io import (
    BadMagicError,
    BmpError,
    BmpFormatError,
    BmpHeader,
    TruncatedFileError,
    UnsupportedBppError,
    UnsupportedCompressionError,
    load_bmp,
    parse_header,
    read_bmp24,
    save_bmp,
    write_bmp24,
)
from .classic_vcs import (
    PATTERNS,
    RNG_ALGORITHM,
    BitImage,
    ClassicSharePair,
    decode_by_contrast,
    encrypt_bw,
    superimpose,
)
from .color_model import (
    CHANNELS,
    RGB_INDEX,
    Channel,
    ChannelPlane,
    CmyPlanes,
    RgbImage,
    cmy_to_rgb,
    reduce_quarter,
    rescale_x4,
    rgb_to_cmy,
    scale_three_quarter,
)
from .cover_select import (
    CoverAssignment,
    SuitabilityReport,
    assign_covers,
    check_suitability,
    score_cover,
)
from .errors import (
    DimensionMismatchError,
    DuplicateCoverError,
    InvalidBlockError,
    ModeMismatchError,
    SidecarError,
    SizeRuleError,
    VcShareError,
)
from .metrics import (
    LeakageStat,
    MetricsReport,
    build_report,
    leakage_correlation,
    mae,
    per_channel_mae,
    psnr,
)
from .share_pipeline import (
    Share,
    ShareMode,
    ShareSet,
    generate_shares,
    mix_pixel,
    recover_from_planes,
    recover_secret,
    remove_cover,
    subtractive_stack,
)

__version__ = "0.1.0"

__all__ = [
    "BadMagicError",
    "BitImage",
    "BmpError",
    "BmpFormatError",
    "BmpHeader",
    "CHANNELS",
    "Channel",
    "ChannelPlane",
    "ClassicSharePair",
    "CmyPlanes",
    "CoverAssignment",
    "DimensionMismatchError",
    "DuplicateCoverError",
    "InvalidBlockError",
    "LeakageStat",
    "MetricsReport",
    "ModeMismatchError",
    "PATTERNS",
    "RGB_INDEX",
    "RNG_ALGORITHM",
    "RgbImage",
    "Share",
    "ShareMode",
    "ShareSet",
    "SidecarError",
    "SizeRuleError",
    "SuitabilityReport",
    "TruncatedFileError",
    "UnsupportedBppError",
    "UnsupportedCompressionError",
    "VcShareError",
    "assign_covers",
    "build_report",
    "check_suitability",
    "cmy_to_rgb",
    "decode_by_contrast",
    "encrypt_bw",
    "generate_shares",
    "leakage_correlation",
    "load_bmp",
    "mae",
    "mix_pixel",
    "parse_header",
    "per_channel_mae",
    "psnr",
    "read_bmp24",
    "recover_from_planes",
    "recover_secret",
    "reduce_quarter",
    "remove_cover",
    "rescale_x4",
    "rgb_to_cmy",
    "save_bmp",
    "scale_three_quarter",
    "score_cover",
    "subtractive_stack",
    "superimpose",
    "write_bmp24",
]
