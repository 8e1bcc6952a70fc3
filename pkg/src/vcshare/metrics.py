"""Reconstruction quality and per-share leakage measurements."""

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .color_model import CHANNELS, ChannelPlane, RgbImage, rgb_to_cmy
from .errors import DimensionMismatchError
from .share_pipeline import Share


@dataclass(frozen=True)
class LeakageStat:
    """Pearson correlation between a share plane and a secret channel."""

    value: float
    degenerate: bool  # a zero-variance plane reports 0.0 with this flag set


@dataclass(frozen=True)
class MetricsReport:
    psnr_db: float
    mae: float
    per_channel_mae: tuple  # (R, G, B)
    leakage: dict  # share role letter -> secret channel letter -> LeakageStat

    def to_lines(self):
        """Serialize as line-oriented key=value text."""
        lines = [
            f"psnr_db={_fmt(self.psnr_db)}",
            f"mae={_fmt(self.mae)}",
        ]
        for name, value in zip("RGB", self.per_channel_mae):
            lines.append(f"mae.{name}={_fmt(value)}")
        for share_role in sorted(self.leakage):
            for channel in sorted(self.leakage[share_role]):
                stat = self.leakage[share_role][channel]
                lines.append(f"leakage.{share_role}.{channel}={_fmt(stat.value)}")
                if stat.degenerate:
                    lines.append(f"leakage.{share_role}.{channel}.degenerate=true")
        return lines


def _fmt(value: float) -> str:
    return "inf" if math.isinf(value) else f"{value:.4f}"


def _check_dims(a: RgbImage, b: RgbImage) -> None:
    if a.pixels.shape != b.pixels.shape:
        raise DimensionMismatchError(
            f"images are {a.width}x{a.height} and {b.width}x{b.height}"
        )


def psnr(a: RgbImage, b: RgbImage) -> float:
    """Peak signal-to-noise ratio in dB over all channels; +inf for identical images."""
    _check_dims(a, b)
    diff = a.pixels.astype(np.float64) - b.pixels.astype(np.float64)
    mse = float(np.mean(diff * diff))
    if mse == 0.0:
        return math.inf
    return 10.0 * math.log10(255.0**2 / mse)


def mae(a: RgbImage, b: RgbImage) -> float:
    """Mean absolute error over all channels."""
    _check_dims(a, b)
    return float(np.abs(a.pixels.astype(np.int16) - b.pixels.astype(np.int16)).mean())


def per_channel_mae(a: RgbImage, b: RgbImage) -> tuple:
    _check_dims(a, b)
    diff = np.abs(a.pixels.astype(np.int16) - b.pixels.astype(np.int16))
    return tuple(float(v) for v in diff.mean(axis=(0, 1)))


def leakage_correlation(share: Share, secret_channel: ChannelPlane) -> LeakageStat:
    """Pearson correlation between a share's mixed plane and one secret channel."""
    if share.plane.values.shape != secret_channel.values.shape:
        raise DimensionMismatchError("share plane and secret channel differ in size")
    x = share.plane.values.ravel().astype(np.float64)
    y = secret_channel.values.ravel().astype(np.float64)
    if x.std() == 0.0 or y.std() == 0.0:
        return LeakageStat(0.0, True)
    value = float(np.corrcoef(x, y)[0, 1])
    return LeakageStat(max(-1.0, min(1.0, value)), False)


def build_report(
    reference: RgbImage,
    reconstructed: RgbImage,
    shares: Optional[Sequence[Share]] = None,
) -> MetricsReport:
    """Assemble the full report; leakage is included when shares are given."""
    leakage = {}
    if shares:
        secret_cmy = rgb_to_cmy(reference)
        for share in shares:
            row = {}
            for ch in CHANNELS:
                row[ch.value] = leakage_correlation(share, secret_cmy.plane(ch))
            leakage[share.role.value] = row
    return MetricsReport(
        psnr_db=psnr(reference, reconstructed),
        mae=mae(reference, reconstructed),
        per_channel_mae=per_channel_mae(reference, reconstructed),
        leakage=leakage,
    )
