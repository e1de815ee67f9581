"""Closed periodic plane curves in the Hermite representation.

A curve with M control points and M tangent vectors uses the frequency
2 pi / M, which is exactly what makes the representation close up over one
period and reproduce circles and (through affine maps) all ellipses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .basis import HermiteData, spline_eval
from .frequency import DomainError, Frequency


@dataclass(frozen=True)
class ClosedHermiteCurve:
    """M-periodic curve r(t) = sum_n (r(n) phi1(t-n) + r'(n) phi2(t-n))."""

    points: np.ndarray
    tangents: np.ndarray

    def __post_init__(self) -> None:
        pts = np.asarray(self.points, dtype=float)
        tan = np.asarray(self.tangents, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise DomainError(f"points must have shape (M, 2), got {pts.shape}")
        if tan.shape != pts.shape:
            raise DomainError(
                f"tangents shape {tan.shape} must match points shape {pts.shape}"
            )
        if len(pts) < 3:
            raise DomainError("a closed curve needs at least M = 3 control points")
        if not (np.isfinite(pts).all() and np.isfinite(tan).all()):
            raise DomainError("control data must be finite")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "tangents", tan)

    @property
    def period(self) -> int:
        return len(self.points)

    @cached_property
    def freq(self) -> Frequency:
        return Frequency(2.0 * math.pi / self.period)

    @cached_property
    def _data(self) -> HermiteData:
        return HermiteData(self.points, self.tangents, periodic=True)

    def to_hermite_data(self) -> HermiteData:
        return self._data

    def eval(self, t: float) -> tuple[np.ndarray, np.ndarray]:
        """Point and tangent at parameter t (wrapped modulo the period)."""
        t = t % self.period
        value, deriv = spline_eval(self.freq, self._data, t)
        return np.asarray(value), np.asarray(deriv)

    def affine(self, matrix: np.ndarray, shift: np.ndarray) -> "ClosedHermiteCurve":
        """Image under x -> A x + b; evaluation commutes with the map."""
        A = np.asarray(matrix, dtype=float)
        b = np.asarray(shift, dtype=float)
        return ClosedHermiteCurve(self.points @ A.T + b, self.tangents @ A.T)


def unit_circle(period: int) -> ClosedHermiteCurve:
    """The unit circle encoded exactly with M = period control points."""
    if period < 3:
        raise DomainError(f"period must be >= 3, got {period!r}")
    w = 2.0 * math.pi / period
    n = np.arange(period)
    points = np.column_stack([np.cos(w * n), np.sin(w * n)])
    tangents = np.column_stack([-w * np.sin(w * n), w * np.cos(w * n)])
    return ClosedHermiteCurve(points, tangents)


_TARGETS = {
    "const": (lambda w, x: 1.0, lambda w, x: 0.0),
    "linear": (lambda w, x: x, lambda w, x: 1.0),
    "cos": (lambda w, x: math.cos(w * x), lambda w, x: -w * math.sin(w * x)),
    "sin": (lambda w, x: math.sin(w * x), lambda w, x: w * math.cos(w * x)),
}

_WINDOW = 10          # samples on -10..10
_CHECK_LIMIT = 8.0    # errors measured on [-8, 8] to stay clear of truncation
_CHECK_COUNT = 1601


def reproduction_check(freq: Frequency, target: str) -> float:
    """Sup error of the Hermite expansion of a target the basis reproduces.

    Samples the target and its derivative on an integer window, evaluates
    the expansion densely on the interior, and returns the worst absolute
    deviation from the analytic target (0 up to roundoff for targets
    1, x, cos(w x), sin(w x)).
    """
    if target not in _TARGETS:
        raise ValueError(f"unknown target {target!r}; pick one of {sorted(_TARGETS)}")
    f, df = _TARGETS[target]
    w = freq.omega0
    ns = np.arange(-_WINDOW, _WINDOW + 1)
    data = HermiteData(
        np.array([f(w, float(n)) for n in ns]),
        np.array([df(w, float(n)) for n in ns]),
    )
    worst = 0.0
    for x in np.linspace(-_CHECK_LIMIT, _CHECK_LIMIT, _CHECK_COUNT):
        value, _ = spline_eval(freq, data, float(x) + _WINDOW)
        worst = max(worst, abs(float(value) - f(w, float(x))))
    return worst
