#!/usr/bin/env python3
"""Compare coded sizes across codecs on a geometric integer source."""

import argparse
import math
import random
import time

from ghcodes.fibcodec import fib_encode
from ghcodes.ghcodec import encode_fast


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=100_000)
    parser.add_argument("--p", type=float, default=0.05,
                        help="geometric success probability (mean value ~ 1/p)")
    parser.add_argument("--seed", type=int, default=12345)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    scale = math.log1p(-args.p)
    values = [int(math.log(1.0 - rng.random()) / scale) + 1 for _ in range(args.count)]

    rows = [("fib", None)] + [("gh", a) for a in (-2, -3, -4, -7, -12)]
    print(f"{'codec':<10} {'skipped':>8} {'bits/value':>11} {'seconds':>8}")
    for name, a in rows:
        start = time.perf_counter()
        total = skipped = 0
        for v in values:
            if name == "fib":
                total += len(fib_encode(v))
            else:
                out = encode_fast(a, v)
                if out is None:
                    skipped += 1
                else:
                    total += len(out.code)
        seconds = time.perf_counter() - start
        encoded = args.count - skipped
        label = name if a is None else f"gh a={a}"
        print(f"{label:<10} {skipped:>8} {total / encoded:>11.4f} {seconds:>8.3f}")


if __name__ == "__main__":
    main()
