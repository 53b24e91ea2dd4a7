#!/usr/bin/env python3
"""Growth of the layered drawing count against its two reference levels.

For each ring count k the recursion gives a drawing count; the quantity
that matters is its (8k)-th root, the per-point rate.  The table shows
how slowly that rate climbs toward the 3^(1/4) ceiling and where it
first clears 1.31.
"""

import argparse

from redraw.drawings import recursive_layer_count


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-k", type=int, default=96)
    args = ap.parse_args()

    ceiling = 3 ** 0.25
    ks = [k for k in (1, 2, 4, 8, 16, 24, 32, 48, 64, 80, 90, 96) if k <= args.max_k]
    crossed = None
    print(f"{'k':>4} {'count (digits)':>15} {'rate':>10} {'vs 1.31':>8}")
    for k in ks:
        c = recursive_layer_count(k)
        rate = c ** (1 / (8 * k))
        mark = "above" if rate > 1.31 else "below"
        if crossed is None and rate > 1.31:
            crossed = k
        print(f"{k:>4} {len(str(c)):>15} {rate:>10.6f} {mark:>8}")
    print(f"ceiling 3^(1/4) = {ceiling:.6f}")
    if crossed is not None:
        print(f"first sampled k above 1.31: {crossed}")
    else:
        print("rate stays below 1.31 over the sampled range")


if __name__ == "__main__":
    main()
