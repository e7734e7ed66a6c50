#!/usr/bin/env python3
"""Time the enumeration and embedding layers across edge budgets.

Prints one row per (order, edge level): class count, enumeration time, and
time to run the host embedding test over every class.  Useful for sizing
order windows before committing to a long verification run.
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hamsq.enumeration import embeds_in_host, family_count, iter_family


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-min", type=int, default=8)
    ap.add_argument("--n-max", type=int, default=14)
    ap.add_argument("--t-offset", type=int, default=3, help="edge level is n minus this offset")
    ap.add_argument("--embed", action="store_true", help="also time the embedding sweep")
    args = ap.parse_args()

    print(f"{'n':>3} {'t':>3} {'classes':>9} {'enumerate':>10} {'embed-sweep':>11}")
    for n in range(args.n_min, args.n_max + 1):
        t = n - args.t_offset
        if t < 1:
            continue
        t0 = time.monotonic()
        count = family_count(n, t)
        enum_s = time.monotonic() - t0
        sweep = ""
        if args.embed:
            t0 = time.monotonic()
            ne = sum(1 for g in iter_family(n, t) if not embeds_in_host(g, n))
            sweep = f"{time.monotonic() - t0:9.2f}s (ne={ne})"
        print(f"{n:>3} {t:>3} {count:>9} {enum_s:>9.2f}s {sweep:>11}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
