"""Command-line surface tying scrambling, embedding, and metrics together.

Exit status is 0 on success, 1 on any validation or I/O failure (with a
diagnostic on stderr). Output files are written atomically, so a failed run
never leaves a partial stego image, key, or report behind.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import bitplane, metrics, netpbm, schedule
from .arnold import Family, TransformSpec, period, period_sweep


def _family(token: str) -> Family:
    try:
        return Family[token.upper()]
    except KeyError:
        raise argparse.ArgumentTypeError(
            f"unknown family {token!r} (choose from classic, rowfirst, colfirst)"
        ) from None


def _load_key(path) -> tuple[schedule.ScrambleSchedule, list[int]]:
    with open(path, "r", encoding="utf-8") as fh:
        return schedule.parse_key(fh.read())


def cmd_embed(args) -> int:
    cover = netpbm.read_gray(args.cover)
    sched, planes = _load_key(args.key)
    if len(args.messages) != len(planes):
        raise ValueError(
            f"{len(args.messages)} message files but key lists {len(planes)} planes"
        )
    messages = []
    for path in args.messages:
        if args.pack:
            with open(path, "rb") as fh:
                messages.append(bitplane.pack_payload(fh.read(), cover.shape[0]))
        else:
            messages.append(netpbm.read_binary(path))
    stego = bitplane.embed(cover, messages, sched, planes)
    netpbm.write_gray(args.out, stego)
    print(metrics.compare(cover, stego).csv(), end="")
    return 0


def cmd_extract(args) -> int:
    if args.raw and args.unpack:
        raise ValueError("--raw and --unpack cannot be combined")
    stego = netpbm.read_gray(args.stego)
    sched, planes = _load_key(args.key)
    if len(args.outputs) != len(planes):
        raise ValueError(
            f"{len(args.outputs)} output files but key lists {len(planes)} planes"
        )
    if args.raw:
        # the no-key view: scrambled plane content, straight off the image
        for path, p in zip(args.outputs, planes):
            netpbm.write_binary(path, bitplane.get_plane(stego, p))
        return 0
    for path, msg in zip(args.outputs, bitplane.extract(stego, sched, planes)):
        if args.unpack:
            netpbm.atomic_write_bytes(path, bitplane.unpack_payload(msg))
        else:
            netpbm.write_binary(path, msg)
    return 0


def cmd_scramble(args) -> int:
    kind, img = netpbm.read_auto(args.image)
    sched, _ = _load_key(args.key)
    out = schedule.schedule_scramble(img, sched)
    (netpbm.write_gray if kind == "gray" else netpbm.write_binary)(args.out, out)
    return 0


def cmd_unscramble(args) -> int:
    kind, img = netpbm.read_auto(args.image)
    sched, _ = _load_key(args.key)
    out = schedule.schedule_unscramble(img, sched)
    (netpbm.write_gray if kind == "gray" else netpbm.write_binary)(args.out, out)
    return 0


def cmd_period(args) -> int:
    print(period(TransformSpec(args.family, args.i), args.side))
    return 0


def cmd_sweep(args) -> int:
    rows = period_sweep(args.family, args.lo, args.hi, args.side)
    text = "i,period\n" + "".join(f"{i},{p}\n" for i, p in rows)
    if args.out is None:
        print(text, end="")
    else:
        netpbm.atomic_write_bytes(args.out, text.encode("ascii"))
    return 0


def cmd_planes(args) -> int:
    img = netpbm.read_gray(args.image)
    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for p in range(8):
        netpbm.write_binary(outdir / f"plane_{p}.pbm", bitplane.get_plane(img, p))
    return 0


def cmd_metrics(args) -> int:
    a = netpbm.read_gray(args.a)
    b = netpbm.read_gray(args.b)
    print(metrics.compare(a, b).csv(), end="")
    return 0


def cmd_keygen(args) -> int:
    rng = random.Random(args.seed)
    sched = schedule.random_schedule(args.side, args.stages, rng)
    text = schedule.serialize_key(sched, args.planes)
    netpbm.atomic_write_bytes(args.out, text.encode("ascii"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catstego",
        description="Keyed cat-map scrambling and bit-plane LSB steganography "
        "for square grayscale images (binary Netpbm P5/P4 files).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("embed", help="scramble messages and embed them into a cover")
    p.add_argument("cover", help="cover image (P5 .pgm)")
    p.add_argument("key", help="key file")
    p.add_argument("out", help="stego image to write (P5 .pgm)")
    p.add_argument("messages", nargs="+", help="secret images (P4 .pbm), one per key plane")
    p.add_argument("--pack", action="store_true",
                   help="treat each message file as raw bytes and pack it into a plane")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("extract", help="recover messages from a stego image")
    p.add_argument("stego", help="stego image (P5 .pgm)")
    p.add_argument("key", help="key file")
    p.add_argument("outputs", nargs="+", help="output paths, one per key plane")
    p.add_argument("--raw", action="store_true",
                   help="write raw plane content without unscrambling")
    p.add_argument("--unpack", action="store_true",
                   help="unpack each recovered plane back into raw bytes")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("scramble", help="scramble a whole image with a key's schedule")
    p.add_argument("image", help="P5 or P4 image")
    p.add_argument("key", help="key file")
    p.add_argument("out", help="output image (same format as input)")
    p.set_defaults(func=cmd_scramble)

    p = sub.add_parser("unscramble", help="invert a key's schedule on a whole image")
    p.add_argument("image", help="P5 or P4 image")
    p.add_argument("key", help="key file")
    p.add_argument("out", help="output image (same format as input)")
    p.set_defaults(func=cmd_unscramble)

    p = sub.add_parser("period", help="print the period of one transform")
    p.add_argument("family", type=_family, help="classic, rowfirst, or colfirst")
    p.add_argument("side", type=int, help="grid side N")
    p.add_argument("--i", type=int, default=1, help="family parameter i (default 1)")
    p.set_defaults(func=cmd_period)

    p = sub.add_parser("sweep", help="period table over a range of i values")
    p.add_argument("family", type=_family, help="classic, rowfirst, or colfirst")
    p.add_argument("lo", type=int, help="first i")
    p.add_argument("hi", type=int, help="last i")
    p.add_argument("side", type=int, help="grid side N")
    p.add_argument("--out", help="CSV path (default: print to stdout)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("planes", help="slice an image into its 8 bit planes")
    p.add_argument("image", help="grayscale image (P5 .pgm)")
    p.add_argument("outdir", help="directory for plane_0.pbm .. plane_7.pbm")
    p.set_defaults(func=cmd_planes)

    p = sub.add_parser("metrics", help="print mse/psnr/bit-preservation between two images")
    p.add_argument("a", help="first image (P5 .pgm)")
    p.add_argument("b", help="second image (P5 .pgm)")
    p.set_defaults(func=cmd_metrics)

    p = sub.add_parser("keygen", help="write a random valid key file")
    p.add_argument("side", type=int, help="image side N the key is for")
    p.add_argument("stages", type=int, help="number of scramble stages m")
    p.add_argument("out", help="key file to write")
    p.add_argument("--seed", type=int, default=None,
                   help="RNG seed; same seed reproduces the same key")
    p.add_argument("--planes", type=int, nargs="+", default=[0, 1, 2],
                   help="target bit planes (default: 0 1 2)")
    p.set_defaults(func=cmd_keygen)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
