"""Command-line front end.

Subcommands::

    kmm transform -k K IN.pnm OUT.pnm     quantize an image, report PSNR
    kmm pack -k K IN.pnm OUT.kmm          encode to a KMM1 container
    kmm unpack IN.kmm OUT.pnm             decode a KMM1 container
    kmm metrics A.pnm B.pnm [--json]      MSE / PSNR between two images
    kmm histogram IN.pnm OUT.csv          per-channel value counts
    kmm sweep IN.pnm KMIN KMAX OUT.csv    quality/size table over a k range

All outputs are deterministic: the same inputs produce byte-identical
files.  Floats are written with four decimal places; an infinite PSNR
(identical images) is written as the string ``inf``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from kmodulus.container import ContainerError, pack, unpack
from kmodulus.image import RasterImage
from kmodulus.metrics import entropy, histogram, mse, psnr, quality_report
from kmodulus.pnm import PnmError, read_pnm, write_pnm
from kmodulus.transform import (
    K_MAX,
    K_MIN,
    bits_per_pixel,
    levels,
    quotient_image,
    reconstruct,
    transform_image,
)

SWEEP_COLUMNS = (
    "k",
    "psnr_db",
    "mse",
    "bits_per_pixel",
    "levels",
    "quotient_entropy",
    "packed_bytes",
)


@dataclass(frozen=True)
class SweepRow:
    """One line of the k-sweep table: quality and size figures for one k."""

    k: int
    psnr_db: float
    mse: float
    bits_per_pixel: int
    levels: int
    quotient_entropy: float
    packed_bytes: int


def sweep_rows(img: RasterImage, k_min: int, k_max: int) -> list[SweepRow]:
    """Quality/size figures for every k in the inclusive range, ascending.

    PSNR and MSE are measured against the original image.
    """
    if k_min > k_max:
        raise ValueError(f"empty k range: {k_min} > {k_max}")
    rows = []
    for k in range(k_min, k_max + 1):
        transformed = transform_image(img, k)
        qimg = quotient_image(img, k)
        # Pooled quotient distribution: view the stream as one flat channel.
        stream = RasterImage(qimg.sample_count, 1, 1, qimg.quotients)
        rows.append(
            SweepRow(
                k=k,
                psnr_db=psnr(img, transformed),
                mse=mse(img, transformed),
                bits_per_pixel=bits_per_pixel(k),
                levels=levels(k),
                quotient_entropy=entropy(histogram(stream))[0],
                packed_bytes=len(pack(qimg)),
            )
        )
    return rows


def _fmt(x: float) -> str:
    return "inf" if math.isinf(x) else f"{x:.4f}"


def _json_value(x: float) -> float | str:
    return "inf" if math.isinf(x) else round(x, 4)


def _read_image(path: str) -> RasterImage:
    return read_pnm(Path(path).read_bytes())


def _k_arg(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"k must be an integer, got {text!r}")
    if not K_MIN <= k <= K_MAX:
        raise argparse.ArgumentTypeError(f"k must be in {K_MIN}..{K_MAX}, got {k}")
    return k


def cmd_transform(args: argparse.Namespace) -> int:
    img = _read_image(args.input)
    transformed = transform_image(img, args.k)
    Path(args.output).write_bytes(write_pnm(transformed))
    print(f"PSNR: {_fmt(psnr(img, transformed))} dB")
    return 0


def cmd_pack(args: argparse.Namespace) -> int:
    img = _read_image(args.input)
    Path(args.output).write_bytes(pack(quotient_image(img, args.k)))
    return 0


def cmd_unpack(args: argparse.Namespace) -> int:
    qimg = unpack(Path(args.input).read_bytes())
    Path(args.output).write_bytes(write_pnm(reconstruct(qimg)))
    return 0


def cmd_metrics(args: argparse.Namespace) -> int:
    report = quality_report(_read_image(args.a), _read_image(args.b))
    if args.json:
        print(
            json.dumps(
                {
                    "mse": _json_value(report.mse),
                    "psnr_db": _json_value(report.psnr_db),
                    "per_channel_psnr": [
                        _json_value(p) for p in report.per_channel_psnr
                    ],
                }
            )
        )
    else:
        print(f"MSE:  {_fmt(report.mse)}")
        print(f"PSNR: {_fmt(report.psnr_db)} dB")
        if len(report.per_channel_psnr) > 1:
            for c, p in enumerate(report.per_channel_psnr):
                print(f"PSNR (channel {c}): {_fmt(p)} dB")
    return 0


def cmd_histogram(args: argparse.Namespace) -> int:
    h = histogram(_read_image(args.input))
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("value", "channel", "count"))
    for channel, counts in enumerate(h.counts):
        for value, count in enumerate(counts):
            writer.writerow((value, channel, count))
    Path(args.output).write_text(buf.getvalue())
    return 0


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.k_min > args.k_max:
        print(f"error: k-min {args.k_min} exceeds k-max {args.k_max}", file=sys.stderr)
        return 2
    rows = sweep_rows(_read_image(args.input), args.k_min, args.k_max)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_COLUMNS)
    for row in rows:
        writer.writerow(
            (
                row.k,
                _fmt(row.psnr_db),
                _fmt(row.mse),
                row.bits_per_pixel,
                row.levels,
                _fmt(row.quotient_entropy),
                row.packed_bytes,
            )
        )
    Path(args.output).write_text(buf.getvalue())
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kmm",
        description="Quantize 8-bit PNM images to multiples of k, "
        "pack the quotients into KMM1 containers, and measure fidelity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="quantize an image to multiples of k")
    p.add_argument("-k", "--k", type=_k_arg, required=True, help="divisor, 2..128")
    p.add_argument("input", help="input PGM/PPM file")
    p.add_argument("output", help="output PGM/PPM file")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("pack", help="encode an image into a KMM1 container")
    p.add_argument("-k", "--k", type=_k_arg, required=True, help="divisor, 2..128")
    p.add_argument("input", help="input PGM/PPM file")
    p.add_argument("output", help="output KMM1 file")
    p.set_defaults(func=cmd_pack)

    p = sub.add_parser("unpack", help="decode a KMM1 container back to PNM")
    p.add_argument("input", help="input KMM1 file")
    p.add_argument("output", help="output PGM/PPM file")
    p.set_defaults(func=cmd_unpack)

    p = sub.add_parser("metrics", help="MSE and PSNR between two images")
    p.add_argument("a", help="first PGM/PPM file")
    p.add_argument("b", help="second PGM/PPM file")
    p.add_argument("--json", action="store_true", help="emit JSON instead of text")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("histogram", help="per-channel value counts as CSV")
    p.add_argument("input", help="input PGM/PPM file")
    p.add_argument("output", help="output CSV file")
    p.set_defaults(func=cmd_histogram)

    p = sub.add_parser("sweep", help="quality/size table over a range of k")
    p.add_argument("input", help="input PGM/PPM file")
    p.add_argument("k_min", type=_k_arg, help="first k, 2..128")
    p.add_argument("k_max", type=_k_arg, help="last k, 2..128")
    p.add_argument("output", help="output CSV file")
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (PnmError, ContainerError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
