"""Run both construction pipelines over a range of alphabets.

Builds ucycles on 3-multisets two ways: the inductive assembly for
n = 7, 10, 13, ... and the pair-doubling route (search for a 3-subset
ucycle, then double) for even n not divisible by 3.  Every word is
verified, written as a .ucy file, and timed.

Usage:
    python scripts/construction_sweep.py --out-dir results --max-n 31
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from ucycles.doubling import construct_doubling
from ucycles.inductive import provenance_report, run_induction
from ucycles.searchgen import generate_subset_ucycle
from ucycles.ucyfile import save_ucy
from ucycles.verify import verify_multiset_ucycle, verify_subset_ucycle


@dataclass
class SweepConfig:
    out_dir: Path = Path("results")
    max_n: int = 31
    inductive_ns: tuple[int, ...] = field(init=False)
    doubling_ns: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        self.inductive_ns = tuple(range(7, self.max_n + 1, 3))
        self.doubling_ns = tuple(
            n for n in range(8, self.max_n + 1, 2) if n % 3 != 0
        )


def run_inductive(cfg: SweepConfig) -> list[tuple[str, int, int, float, bool]]:
    rows = []
    for n in cfg.inductive_ns:
        t0 = time.perf_counter()
        state = run_induction(n)
        dt = time.perf_counter() - t0
        word = state.cycle()
        ok = verify_multiset_ucycle(word, 3).ok
        save_ucy(cfg.out_dir / f"inductive_n{n}.ucy", word, 3)
        report = provenance_report(state)
        (cfg.out_dir / f"inductive_n{n}.provenance").write_text(report)
        rows.append(("inductive", n, len(word), dt, ok))
    return rows


def run_doubling(cfg: SweepConfig) -> list[tuple[str, int, int, float, bool]]:
    rows = []
    for n in cfg.doubling_ns:
        t0 = time.perf_counter()
        subset = generate_subset_ucycle(n, 3)
        assert verify_subset_ucycle(subset, 3).ok
        word = construct_doubling(n, subset)
        dt = time.perf_counter() - t0
        ok = verify_multiset_ucycle(word, 3).ok
        save_ucy(cfg.out_dir / f"doubling_n{n}.ucy", word, 3)
        save_ucy(cfg.out_dir / f"subset_n{n}.ucy", subset, 3)
        rows.append(("doubling", n, len(word), dt, ok))
    return rows


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir", type=Path, default=Path("results"))
    parser.add_argument("--max-n", type=int, default=31)
    args = parser.parse_args()

    cfg = SweepConfig(out_dir=args.out_dir, max_n=args.max_n)
    cfg.out_dir.mkdir(parents=True, exist_ok=True)

    rows = run_inductive(cfg) + run_doubling(cfg)
    width = max(len(r[0]) for r in rows)
    print(f"{'route':<{width}}  {'n':>3}  {'length':>7}  {'seconds':>8}  ok")
    for route, n, length, dt, ok in rows:
        print(f"{route:<{width}}  {n:>3}  {length:>7}  {dt:>8.3f}  {ok}")
    bad = [r for r in rows if not r[4]]
    if bad:
        print(f"{len(bad)} words FAILED verification", file=sys.stderr)
        return 1
    print(f"all {len(rows)} words verified; files in {cfg.out_dir}/")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
