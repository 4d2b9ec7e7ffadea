"""
Predicate census over a ladder of size bounds.

Usage:
    python tools/census.py --max-m 3 --max-gamma 1 --workers 8
    python tools/census.py --max-m 2 --max-gamma 2 --order discrete --dedup

For every bound (m, gamma) up to the given maxima, prints the predicate counts and, for each open pattern, whether a
separating structure was found; witnesses are written to --out-dir in the canonical file format.
"""

import argparse
from pathlib import Path

from gamma_lab.algebra.structure import FiniteOrderedGammaSemigroup
from gamma_lab.enumeration import DEFAULT_CAPACITY, ORDER_MODES, EnumerationSpec
from gamma_lab.errors import CapacityError
from gamma_lab.evaluation.sweep_evaluator import PATTERN_SLUGS, census
from gamma_lab.utils.io import save_structure

if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-m", type=int, default=3)
    parser.add_argument("--max-gamma", type=int, default=1)
    parser.add_argument("--order", type=str, default="all", choices=list(ORDER_MODES))
    parser.add_argument("--dedup", action="store_true")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--capacity", type=int, default=DEFAULT_CAPACITY)
    parser.add_argument("--out-dir", type=str, default="./results/census")
    args = parser.parse_args()

    print("======= Gamma-semigroup census =======\n")

    for m in range(1, args.max_m + 1):
        for g in range(1, args.max_gamma + 1):
            spec = EnumerationSpec(m, g, order_mode=args.order, dedup=args.dedup, capacity=args.capacity)
            try:
                report = census(spec, workers=args.workers)
            except CapacityError as e:
                print(f"|M| <= {m}, |Gamma| <= {g}: skipped ({e})\n")
                continue
            print(f"|M| <= {m}, |Gamma| <= {g}: {report.stats.valid} structures")
            for name, count in report.predicate_counts.items():
                print(f"  {name}: {count}")
            for name, encoding in report.firsts.items():
                if encoding is None:
                    print(f"  open [{name}]: none in bounds")
                    continue
                path = Path(args.out_dir) / f"m{m}_g{g}" / f"{PATTERN_SLUGS[name]}.gs"
                save_structure(path, FiniteOrderedGammaSemigroup.decode(encoding))
                print(f"  open [{name}]: witness saved to {path}")
            print()
