"""Empirical order of approximation and the stationary-limit of the masks.

Usage: python scripts/convergence_study.py
"""

import math

import numpy as np

from exphermite import Frequency, HermiteData, masks, spline_eval


def interpolation_error(h: float, w0: float = 1.0) -> float:
    scaled = Frequency(h * w0)
    xs = h * np.arange(int(round(4.0 / h)) + 1)
    data = HermiteData(np.sin(2 * xs), 2 * h * np.cos(2 * xs))
    worst = 0.0
    for x in np.linspace(0.25, 3.75, 701):
        value, _ = spline_eval(scaled, data, float(x) / h)
        worst = max(worst, abs(float(value) - math.sin(2 * float(x))))
    return worst


def main() -> None:
    print("interpolation error for f(x) = sin(2x), omega0 = 1:")
    print(f"{'h':>10} {'sup error':>14} {'ratio':>8}")
    prev = None
    for k in range(1, 7):
        h = 2.0 ** (-k)
        err = interpolation_error(h)
        ratio = f"{prev / err:8.2f}" if prev else "       -"
        print(f"{h:10.5f} {err:14.6e} {ratio}")
        prev = err

    print("\ndistance of the rescaled masks from the stationary limit:")
    merrien = np.array([[0.5, -0.125], [1.5, -0.25]])
    freq = Frequency(3 * math.pi / 4)
    print(f"{'level':>6} {'distance':>14}")
    for j in range(0, 13, 2):
        tri = masks(freq, j)
        h = 2.0 ** (-j)
        rescaled = tri.hm1 * np.array([[1.0, 1.0 / h], [h, 1.0]])
        print(f"{j:6d} {np.abs(rescaled - merrien).max():14.6e}")


if __name__ == "__main__":
    main()
