#!/usr/bin/env python3
"""Generate a demo cover image and a few secret binary images.

The outputs are deterministic for a given seed, so walkthroughs in the
README reproduce exactly.
"""

import argparse
from pathlib import Path

from catstego.netpbm import write_binary, write_gray
from catstego.synth import natural_binary, natural_gray


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="demo", help="output directory")
    ap.add_argument("--side", type=int, default=128, help="image side N")
    ap.add_argument("--secrets", type=int, default=3, help="number of secret images")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    cover = natural_gray(args.side, seed=args.seed)
    write_gray(outdir / "cover.pgm", cover)
    print(f"wrote {outdir / 'cover.pgm'} ({args.side}x{args.side})")

    for k in range(args.secrets):
        secret = natural_binary(args.side, seed=args.seed + 100 + k)
        path = outdir / f"secret{k}.pbm"
        write_binary(path, secret)
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
