"""Cover-to-channel assignment by minimum mean pixel difference, plus input checks.

Each of the three primitive channels of the secret is carried by exactly one
cover image.  The cost of a (channel, cover) pair is the mean absolute
difference between the quarter-reduced secret plane and the three-quarter
scaled cover plane of the same channel, i.e. the two operands actually mixed
when the share is generated.  The assignment is the exhaustive minimum over
all 6 bijections.
"""

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import kernels
from .color_model import (
    CHANNELS,
    Channel,
    ChannelPlane,
    CmyPlanes,
    RgbImage,
    rgb_to_cmy,
    scale_three_quarter,
)
from .errors import SizeRuleError

# a pixel counts as dark once any CMY channel reaches this value
DARK_CHANNEL_MIN = 192
# warn when more than this fraction of the secret is dark
DARK_WARN_FRACTION = 0.5


@dataclass(frozen=True)
class CoverAssignment:
    """Bijection from channels to cover indices with the full cost matrix."""

    mapping: dict  # Channel -> cover index
    costs: np.ndarray  # (3, 3) float64, rows follow CHANNELS, columns cover index
    total_cost: float


@dataclass(frozen=True)
class SuitabilityReport:
    size_ok: tuple
    dark_fraction: float
    dark_warning: bool


def score_cover(reduced: ChannelPlane, cover_channel: ChannelPlane) -> float:
    """Mean absolute difference over the cover's top-left region of the secret's size."""
    sh, sw = reduced.values.shape
    ch, cw = cover_channel.values.shape
    if ch < sh or cw < sw:
        raise SizeRuleError(
            f"cover channel is {cw}x{ch}, smaller than the secret's {sw}x{sh}"
        )
    return kernels.mean_abs_diff(reduced.values, cover_channel.values[:sh, :sw])


def assign_covers(reduced: CmyPlanes, covers: Sequence[RgbImage]) -> CoverAssignment:
    """Pick which cover carries which channel by exhaustive minimum total cost.

    Ties go to the lexicographically first assignment in (C, M, Y) channel
    order, lowest cover index first, so results are deterministic.
    """
    if len(covers) != 3:
        raise ValueError(f"expected exactly 3 covers, got {len(covers)}")
    costs = np.empty((3, 3), dtype=np.float64)
    for k, cover in enumerate(covers):
        cover_cmy = rgb_to_cmy(cover)
        for i, ch in enumerate(CHANNELS):
            scaled = scale_three_quarter(cover_cmy.plane(ch))
            costs[i, k] = score_cover(reduced.plane(ch), scaled)

    best_perm = None
    best_cost = np.inf
    for perm in itertools.permutations(range(3)):
        cost = sum(costs[i, perm[i]] for i in range(3))
        if cost < best_cost:
            best_perm = perm
            best_cost = cost
    mapping = {ch: best_perm[i] for i, ch in enumerate(CHANNELS)}
    return CoverAssignment(mapping=mapping, costs=costs, total_cost=float(best_cost))


def check_suitability(secret: RgbImage, covers: Sequence[RgbImage]) -> SuitabilityReport:
    """Report-only checks: the per-cover size rule and the dark-image heuristic."""
    if len(covers) != 3:
        raise ValueError(f"expected exactly 3 covers, got {len(covers)}")
    size_ok = tuple(
        cover.width >= secret.width and cover.height >= secret.height for cover in covers
    )
    cmy = rgb_to_cmy(secret)
    stacked = np.stack([p.values for p in cmy])
    dark_fraction = float((stacked.max(axis=0) >= DARK_CHANNEL_MIN).mean())
    return SuitabilityReport(
        size_ok=size_ok,
        dark_fraction=dark_fraction,
        dark_warning=dark_fraction > DARK_WARN_FRACTION,
    )
