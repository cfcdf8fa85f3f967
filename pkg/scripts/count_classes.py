"""Count distinct ucycles on t-multisets for one (n, t), up to symmetry.

Two numbers come back: classes distinct under rotation plus alphabet
relabeling, and classes when reflections are also identified.  With
--list the class representatives are printed as well.

Usage:
    python scripts/count_classes.py --n 4 --t 3
    python scripts/count_classes.py --n 3 --t 2 --list --workers 2
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ucycles.searchgen import DEFAULT_COUNT_BUDGET, count_distinct, enumerate_ucycles
from ucycles.verify import admissible_multiset


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--t", type=int, required=True)
    parser.add_argument("--budget", type=int, default=DEFAULT_COUNT_BUDGET)
    parser.add_argument("--workers", type=int, default=None)
    parser.add_argument("--list", action="store_true",
                        help="also print one representative per class")
    args = parser.parse_args()

    if not admissible_multiset(args.n, args.t):
        print(f"(n={args.n}, t={args.t}) is inadmissible: the number of "
              "t-multisets is not a multiple of n", file=sys.stderr)
        return 2

    t0 = time.perf_counter()
    result = count_distinct(args.n, args.t, budget=args.budget,
                            workers=args.workers)
    dt = time.perf_counter() - t0
    print(result.as_text())
    print(f"visited {result.nodes_visited} nodes in {dt:.2f}s",
          file=sys.stderr)
    if not result.exhausted:
        print("budget exhausted before the search space was; counts are "
              "lower bounds", file=sys.stderr)
        return 3

    if args.list:
        for cls in enumerate_ucycles(args.n, args.t):
            print(" ".join(map(str, cls.representative.letters)))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
