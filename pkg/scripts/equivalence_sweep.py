"""Cross-check the minimal-collider-path criterion against the m-separation oracle.

Draws random MAGs plus their single-edit mutations and reports agreement.

    python scripts/equivalence_sweep.py --seeds 5 --max-n 8
"""

from __future__ import annotations

import argparse
import collections
import sys
import time

from magpath.corpus import mag_pairs
from magpath.equivalence import oracle_equivalent, zzl_equivalent


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seeds", type=int, default=3)
    parser.add_argument("--max-n", type=int, default=7)
    parser.add_argument("--base", type=int, default=60, help="base graphs per seed")
    args = parser.parse_args()

    tally: collections.Counter[tuple[bool, bool]] = collections.Counter()
    t0 = time.perf_counter()
    for seed in range(args.seeds):
        for g, h in mag_pairs(seed=seed, max_n=args.max_n, n_base=args.base):
            if g == h:
                continue
            zzl = zzl_equivalent(g, h)
            oracle = oracle_equivalent(g, h)
            tally[zzl.equivalent, oracle.equivalent] += 1
            if zzl.equivalent != oracle.equivalent:
                print("DISAGREEMENT", g, h, sep="\n  ")
                print(zzl.to_text() + oracle.to_text())
    total = sum(tally.values())
    agree = tally[True, True] + tally[False, False]
    print(f"pairs={total} agree={agree} equivalent={tally[True, True]} elapsed={time.perf_counter() - t0:.1f}s")
    return 0 if agree == total else 1


if __name__ == "__main__":
    sys.exit(main())
