"""Look at the generating functions of ζ^m over [3]* (norm grading).

Over [2]* the numerators and denominators of a_m, b_m have closed forms; for
three letters no such form is known.  This prints the canonical forms of
the iterates so their denominators can be inspected by eye.
"""

import argparse

from subword_mobius.genfun import f_iterate
from subword_mobius.ratfn import format_poly


def main():
    ap = argparse.ArgumentParser(description="iterates of f over [3]*")
    ap.add_argument("--max-m", type=int, default=4)
    ap.add_argument("--grading", choices=["norm", "length"], default="norm")
    args = ap.parse_args()
    var = "x" if args.grading == "norm" else "t"
    for m in range(args.max_m + 1):
        print(f"m = {m}")
        for k, f in enumerate(f_iterate(3, args.grading, m), start=1):
            print(f"  letter {k}: denominator {format_poly(f.den, var)}")
            print(f"            numerator   {format_poly(f.num, var)}")


if __name__ == "__main__":
    main()
