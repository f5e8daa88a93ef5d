"""Compare the normal-embedding Möbius formula with the defining recursion.

Usage: python3 scripts/run_oracle_suite.py [--poset chain:3 --max-length 5]
Without --poset, runs the three standard ranges.
"""

import argparse
import time

from subword_mobius.poset import resolve_poset
from subword_mobius.report import mobius_agreement, oracle_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--poset")
    ap.add_argument("--max-length", type=int, default=4)
    args = ap.parse_args()
    start = time.perf_counter()
    if args.poset:
        checks = [mobius_agreement(resolve_poset(args.poset), args.max_length)]
    else:
        checks = oracle_suite()
    for c in checks:
        print(c.line())
    print(f"elapsed {time.perf_counter() - start:.1f}s")
    return 0 if all(c.passed for c in checks) else 1


if __name__ == "__main__":
    raise SystemExit(main())
