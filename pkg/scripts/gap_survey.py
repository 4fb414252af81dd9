#!/usr/bin/env python3
"""Survey non-encodable runs across sequence parameters.

Prints one line per parameter with the gap bound k, how many integers in
the scanned range have no code, and the longest run of consecutive
misses. The run length never exceeding k is the headline claim this
script lets you eyeball on larger ranges than the test suite covers.
"""

import argparse

from ghcodes.oracle import gap_scan
from ghcodes.sequences import gh_sequence


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--a-lo", type=int, default=-20)
    parser.add_argument("--a-hi", type=int, default=-2)
    parser.add_argument("--max-n", type=int, default=10_000)
    args = parser.parse_args()

    print(f"{'a':>4} {'k':>3} {'missing':>8} {'max_run':>8}  runs (start x length)")
    for a in range(args.a_lo, args.a_hi + 1):
        report = gap_scan(a, args.max_n)
        k = gh_sequence(a).gap_parameter or 0
        shown = " ".join(f"{start}x{length}" for start, length in report.runs[:8])
        more = " ..." if len(report.runs) > 8 else ""
        flag = "" if report.max_run <= k else "  BOUND VIOLATED"
        print(f"{a:>4} {k:>3} {len(report.missing):>8} {report.max_run:>8}  {shown}{more}{flag}")


if __name__ == "__main__":
    main()
