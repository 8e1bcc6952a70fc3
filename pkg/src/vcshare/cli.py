"""Command-line front end.

Subcommands: encrypt, decrypt, stack, classic-encrypt, classic-decode,
analyze.  Stdout is line-oriented key=value text; warnings go to stderr.

Exit codes: 0 success, 2 I/O or file-format error (also argparse usage
errors), 3 input-constraint violation (size rule, duplicate covers),
4 inconsistent share set (missing or bad sidecar, mode or size mismatch),
5 invalid block while decoding a classic stack.
"""

import argparse
import sys
from pathlib import Path

import numpy as np

from .bmp_io import BmpError, load_bmp, save_bmp
from .classic_vcs import (
    EXPANSION,
    RNG_ALGORITHM,
    BitImage,
    decode_by_contrast,
    encrypt_bw,
    superimpose,
)
from .color_model import CHANNELS, ChannelPlane, CmyPlanes, RgbImage, rgb_to_cmy
from .cover_select import check_suitability
from .errors import (
    DimensionMismatchError,
    DuplicateCoverError,
    InvalidBlockError,
    ModeMismatchError,
    SidecarError,
    SizeRuleError,
)
from .metrics import build_report
from .share_pipeline import (
    Share,
    ShareMode,
    generate_shares,
    recover_from_planes,
    subtractive_stack,
)

EXIT_OK = 0
EXIT_IO = 2
EXIT_INPUT_RULE = 3
EXIT_INCONSISTENT = 4
EXIT_INVALID_BLOCK = 5

SHARE_FILES = ("share_a.bmp", "share_b.bmp", "share_c.bmp")  # roles C, M, Y
SIDECAR_NAME = "shares.meta"

_SIDECAR_KEYS = ("mode", "assign.C", "assign.M", "assign.Y", "width", "height")


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _print_suitability(report) -> None:
    for k, ok in enumerate(report.size_ok):
        print(f"suitability.size_ok.{k}={_bool(ok)}")
    print(f"suitability.dark_fraction={report.dark_fraction:.4f}")
    print(f"suitability.dark_warning={_bool(report.dark_warning)}")
    if report.dark_warning:
        print(
            "warning: secret image is predominantly dark; shares will be noisy "
            "and easy to spot",
            file=sys.stderr,
        )


def _write_sidecar(path: Path, mode: ShareMode, mapping, width: int, height: int) -> None:
    lines = [f"mode={mode.value}"]
    for ch in CHANNELS:
        lines.append(f"assign.{ch.value}={mapping[ch]}")
    lines.append(f"width={width}")
    lines.append(f"height={height}")
    path.write_text("\n".join(lines) + "\n")


def _parse_sidecar(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SidecarError(f"cannot read sidecar {path}: {exc}") from exc
    fields = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or "=" not in line:
            continue
        key, _, value = line.partition("=")
        fields[key] = value
    for key in _SIDECAR_KEYS:
        if key not in fields:
            raise SidecarError(f"sidecar {path} is missing the {key} line")
    try:
        mode = ShareMode(fields["mode"])
        assign = {ch: int(fields[f"assign.{ch.value}"]) for ch in CHANNELS}
        width = int(fields["width"])
        height = int(fields["height"])
    except ValueError as exc:
        raise SidecarError(f"sidecar {path} has a malformed value: {exc}") from exc
    return {"mode": mode, "assign": assign, "width": width, "height": height}


def _threshold_bits(img: RgbImage) -> BitImage:
    # channel mean >= 128 counts as white; compare integer sums to stay exact
    black = img.pixels.astype(np.uint16).sum(axis=2) < 3 * 128
    return BitImage(np.ascontiguousarray(black))


def _bits_to_image(bits: BitImage) -> RgbImage:
    pixels = np.where(bits.bits[:, :, None], 0, 255).astype(np.uint8).repeat(3, axis=2)
    return RgbImage(np.ascontiguousarray(pixels))


def run_encrypt(args) -> int:
    secret = load_bmp(args.secret)
    covers = [load_bmp(p) for p in args.covers]
    _print_suitability(check_suitability(secret, covers))

    share_set = generate_shares(secret, covers, ShareMode(args.mode))
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    for share, name in zip(share_set.shares, SHARE_FILES):
        path = out_dir / name
        save_bmp(path, share.rendered)
        print(f"out.{name.removesuffix('.bmp')}={path}")
    meta_path = out_dir / SIDECAR_NAME
    _write_sidecar(meta_path, share_set.mode, share_set.assignment.mapping,
                   secret.width, secret.height)
    print(f"out.meta={meta_path}")
    for ch in CHANNELS:
        print(f"assign.{ch.value}={share_set.assignment.mapping[ch]}")
    print(f"assign.total_cost={share_set.assignment.total_cost:.4f}")
    print(f"mode={share_set.mode.value}")
    return EXIT_OK


def run_decrypt(args) -> int:
    meta = _parse_sidecar(args.meta)
    rendered = [load_bmp(p) for p in args.shares]
    expected = (meta["height"], meta["width"], 3)
    for path, img in zip(args.shares, rendered):
        if img.pixels.shape != expected:
            raise DimensionMismatchError(
                f"share {path} is {img.width}x{img.height}, sidecar says "
                f"{meta['width']}x{meta['height']}"
            )

    # share files are in role order C, M, Y; the mixed plane is the rendered
    # image's own channel read back through the complement
    shares = []
    for ch, img in zip(CHANNELS, rendered):
        shares.append(
            Share(
                role=ch,
                cover_index=meta["assign"][ch],
                mode=meta["mode"],
                plane=rgb_to_cmy(img).plane(ch),
                rendered=img,
            )
        )
    planes = CmyPlanes(*(share.plane for share in shares))
    recovered = recover_from_planes(planes, meta["mode"])
    save_bmp(args.out, recovered)
    print(f"out.recovered={args.out}")
    if args.reference:
        reference = load_bmp(args.reference)
        for line in build_report(reference, recovered, shares).to_lines():
            print(line)
    return EXIT_OK


def run_stack(args) -> int:
    images = [load_bmp(p) for p in args.shares]
    save_bmp(args.out, subtractive_stack(images))
    print(f"out.stacked={args.out}")
    return EXIT_OK


def run_classic_encrypt(args) -> int:
    secret = load_bmp(args.secret)
    bits = _threshold_bits(secret)
    pair = encrypt_bw(bits, args.seed)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    stacked = superimpose(pair.share1, pair.share2)
    outputs = {
        "share1": pair.share1,
        "share2": pair.share2,
        "stacked": stacked,
    }
    for name, bitmap in outputs.items():
        path = out_dir / f"{name}.bmp"
        save_bmp(path, _bits_to_image(bitmap))
        print(f"out.{name}={path}")
    meta_path = out_dir / "classic.meta"
    meta_path.write_text(
        f"seed={pair.seed}\nrng={RNG_ALGORITHM}\nexpansion={EXPANSION}\n"
        f"width={bits.width}\nheight={bits.height}\n"
    )
    print(f"out.meta={meta_path}")
    print(f"seed={pair.seed}")
    print(f"rng={RNG_ALGORITHM}")
    return EXIT_OK


def run_classic_decode(args) -> int:
    stacked = _threshold_bits(load_bmp(args.stacked))
    recovered = decode_by_contrast(stacked)
    save_bmp(args.out, _bits_to_image(recovered))
    print(f"out.recovered={args.out}")
    return EXIT_OK


def run_analyze(args) -> int:
    secret = load_bmp(args.secret)
    covers = [load_bmp(p) for p in args.covers]
    _print_suitability(check_suitability(secret, covers))

    mode = ShareMode(args.mode)
    share_set = generate_shares(secret, covers, mode)
    recovered = recover_from_planes(
        CmyPlanes(*(s.plane for s in share_set.shares)), mode
    )
    for ch in CHANNELS:
        print(f"assign.{ch.value}={share_set.assignment.mapping[ch]}")
    for i, ch in enumerate(CHANNELS):
        for k in range(3):
            print(f"assign.cost.{ch.value}.{k}={share_set.assignment.costs[i, k]:.4f}")
    print(f"assign.total_cost={share_set.assignment.total_cost:.4f}")
    print(f"mode={mode.value}")
    for line in build_report(secret, recovered, share_set.shares).to_lines():
        print(line)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vcshare",
        description="Hide a 24-bit BMP inside three meaningful cover-image shares.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encrypt", help="split a secret image into three cover-embedded shares")
    p.add_argument("--secret", required=True, help="secret image (24-bpp BMP)")
    p.add_argument("--covers", required=True, nargs=3, metavar="COVER",
                   help="three distinct cover images, each at least the secret's size")
    p.add_argument("--mode", choices=[m.value for m in ShareMode], default="separable")
    p.add_argument("--out", required=True, help="output directory for shares and sidecar")
    p.set_defaults(func=run_encrypt)

    p = sub.add_parser("decrypt", help="reconstruct the secret from three shares")
    p.add_argument("--shares", required=True, nargs=3, metavar="SHARE",
                   help="share files in C, M, Y order (share_a, share_b, share_c)")
    p.add_argument("--meta", required=True, help="sidecar written by encrypt")
    p.add_argument("--reference", help="original secret; prints quality metrics")
    p.add_argument("--out", required=True, help="output BMP path")
    p.set_defaults(func=run_decrypt)

    p = sub.add_parser("stack", help="simulate stacking three transparencies (per-channel min)")
    p.add_argument("--shares", required=True, nargs=3, metavar="SHARE")
    p.add_argument("--out", required=True)
    p.set_defaults(func=run_stack)

    p = sub.add_parser("classic-encrypt", help="(2,2) black-and-white scheme with 2x2 expansion")
    p.add_argument("--secret", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", required=True, help="output directory")
    p.set_defaults(func=run_classic_encrypt)

    p = sub.add_parser("classic-decode", help="decode a stacked pair back to the bitmap")
    p.add_argument("--stacked", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=run_classic_decode)

    p = sub.add_parser("analyze", help="report suitability, assignment, quality, and leakage")
    p.add_argument("--secret", required=True)
    p.add_argument("--covers", required=True, nargs=3, metavar="COVER")
    p.add_argument("--mode", choices=[m.value for m in ShareMode], default="separable")
    p.set_defaults(func=run_analyze)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (BmpError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (SizeRuleError, DuplicateCoverError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_RULE
    except (SidecarError, ModeMismatchError, DimensionMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except InvalidBlockError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_BLOCK


if __name__ == "__main__":
    sys.exit(main())
