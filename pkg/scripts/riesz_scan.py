"""Scan the Riesz bounds and the determinant lower bound over frequencies.

Usage: python scripts/riesz_scan.py [count]
"""

import math
import sys

from exphermite import Frequency, det_scan_min, lower_bound_G, riesz_bounds


def main() -> None:
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 16
    print(f"{'omega0':>10} {'alpha':>12} {'beta':>12} {'min det':>12} {'G bound':>12}")
    for k in range(1, count + 1):
        w0 = k * math.pi / count
        freq = Frequency(w0)
        alpha, beta = riesz_bounds(freq)
        print(
            f"{w0:10.6f} {alpha:12.6e} {beta:12.6e} "
            f"{det_scan_min(freq):12.6e} {lower_bound_G(freq):12.6e}"
        )


if __name__ == "__main__":
    main()
