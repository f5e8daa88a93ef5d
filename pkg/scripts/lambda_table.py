"""Print the table of μ(a^i, c^j) on the poset a < c > b next to the
coefficients predicted by Chebyshev polynomials."""

import argparse
import time

from subword_mobius.chebyshev import format_lambda_table, lambda_table


def main():
    ap = argparse.ArgumentParser(description="Chebyshev table for the Λ poset")
    ap.add_argument("--max", type=int, default=5, dest="max_j")
    args = ap.parse_args()
    start = time.perf_counter()
    table = lambda_table(args.max_j)
    print("\n".join(format_lambda_table(table, args.max_j)))
    bad = [r for row in table for r in row if not r.agree]
    print(f"{len(bad)} mismatches, {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
