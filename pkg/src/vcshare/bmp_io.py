"""Bit-exact reader and writer for 24-bit uncompressed BMP files.

Layout handled here, little-endian throughout:

  14-byte file header   'BM', u32 file size, u32 reserved, u32 pixel offset
  40-byte info header   u32 header size, i32 width, i32 height, u16 planes,
                        u16 bpp, u32 compression, u32 image size, i32 x ppm,
                        i32 y ppm, u32 colors, u32 important
  pixel array           rows bottom-up (top-down when height is negative),
                        BGR byte order, each row zero-padded to 4 bytes

Only BI_RGB 24 bpp is supported; anything else is rejected with an error
naming the offending field.  The writer always emits the canonical bottom-up
40-byte-info-header form, so read(write(img)) == img and write(read(data))
== data for canonical files.
"""

import struct
from dataclasses import dataclass

import numpy as np

from .color_model import RgbImage
from .errors import VcShareError

_FILE_HEADER = struct.Struct("<2sIHHI")
_INFO_HEADER = struct.Struct("<IiiHHIIiiII")

FILE_HEADER_SIZE = 14
INFO_HEADER_SIZE = 40
PIXEL_OFFSET = FILE_HEADER_SIZE + INFO_HEADER_SIZE

# 72 dpi in pixels per metre, the conventional resolution stamp
_PPM = 2835


class BmpError(VcShareError):
    """Base for BMP decode errors; `field` names the part of the file at fault."""

    def __init__(self, message: str, field: str = "file"):
        super().__init__(message)
        self.field = field


class BadMagicError(BmpError):
    def __init__(self, message: str):
        super().__init__(message, field="magic")


class UnsupportedBppError(BmpError):
    def __init__(self, message: str):
        super().__init__(message, field="bpp")


class UnsupportedCompressionError(BmpError):
    def __init__(self, message: str):
        super().__init__(message, field="compression")


class TruncatedFileError(BmpError):
    pass


class BmpFormatError(BmpError):
    """Malformed header field other than the dedicated cases above."""


@dataclass(frozen=True)
class BmpHeader:
    """Validated header fields of a decodable file."""

    file_size: int
    pixel_offset: int
    width: int
    height: int  # negative means rows are stored top-down
    bpp: int
    compression: int


def _row_stride(width: int) -> int:
    return (3 * width + 3) & ~3


def parse_header(data: bytes) -> BmpHeader:
    """Validate the headers of a BMP byte sequence, before touching pixel data."""
    if len(data) < 2:
        raise TruncatedFileError(f"file is {len(data)} bytes, too short for the magic")
    if data[:2] != b"BM":
        raise BadMagicError(f"bad magic {data[:2]!r}, expected b'BM'")
    if len(data) < PIXEL_OFFSET:
        raise TruncatedFileError(
            f"file is {len(data)} bytes, shorter than the {PIXEL_OFFSET}-byte headers"
        )
    _, file_size, _, _, pixel_offset = _FILE_HEADER.unpack_from(data, 0)
    (
        header_size,
        width,
        height,
        planes,
        bpp,
        compression,
        _image_size,
        _xppm,
        _yppm,
        _colors,
        _important,
    ) = _INFO_HEADER.unpack_from(data, FILE_HEADER_SIZE)

    if header_size < INFO_HEADER_SIZE:
        raise BmpFormatError(f"info header size {header_size} < 40", field="header_size")
    if planes != 1:
        raise BmpFormatError(f"planes is {planes}, must be 1", field="planes")
    if bpp != 24:
        raise UnsupportedBppError(f"{bpp} bpp is not supported, only 24")
    if compression != 0:
        raise UnsupportedCompressionError(
            f"compression {compression} is not supported, only 0 (BI_RGB)"
        )
    if width <= 0:
        raise BmpFormatError(f"width is {width}, must be positive", field="width")
    if height == 0:
        raise BmpFormatError("height is 0", field="height")
    # info headers larger than 40 bytes are tolerated, pixels just start later
    if pixel_offset < FILE_HEADER_SIZE + header_size:
        raise BmpFormatError(
            f"pixel offset {pixel_offset} overlaps the {FILE_HEADER_SIZE + header_size}-byte headers",
            field="pixel_offset",
        )
    return BmpHeader(
        file_size=file_size,
        pixel_offset=pixel_offset,
        width=width,
        height=height,
        bpp=bpp,
        compression=compression,
    )


def read_bmp24(data: bytes) -> RgbImage:
    """Decode a 24-bpp uncompressed BMP byte sequence into a top-down RGB image."""
    data = bytes(data)
    header = parse_header(data)

    rows = abs(header.height)
    width = header.width
    stride = _row_stride(width)
    needed = header.pixel_offset + stride * rows
    if needed > len(data):
        raise TruncatedFileError(
            f"pixel array needs {needed} bytes, file has only {len(data)}"
        )

    raw = np.frombuffer(
        data, dtype=np.uint8, count=stride * rows, offset=header.pixel_offset
    )
    bgr = raw.reshape(rows, stride)[:, : 3 * width].reshape(rows, width, 3)
    rgb = bgr[:, :, ::-1]
    if header.height > 0:
        rgb = rgb[::-1]  # stored bottom-up
    return RgbImage(np.ascontiguousarray(rgb))


def write_bmp24(img: RgbImage) -> bytes:
    """Encode an image as a canonical bottom-up 24-bpp BMP byte sequence."""
    h, w = img.height, img.width
    stride = _row_stride(w)
    image_size = stride * h
    rows = np.zeros((h, stride), dtype=np.uint8)
    rows[:, : 3 * w] = img.pixels[::-1, :, ::-1].reshape(h, 3 * w)
    header = _FILE_HEADER.pack(b"BM", PIXEL_OFFSET + image_size, 0, 0, PIXEL_OFFSET)
    info = _INFO_HEADER.pack(
        INFO_HEADER_SIZE, w, h, 1, 24, 0, image_size, _PPM, _PPM, 0, 0
    )
    return header + info + rows.tobytes()


def load_bmp(path) -> RgbImage:
    with open(path, "rb") as fh:
        return read_bmp24(fh.read())


def save_bmp(path, img: RgbImage) -> None:
    with open(path, "wb") as fh:
        fh.write(write_bmp24(img))
