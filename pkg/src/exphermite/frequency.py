"""Frequency parameter and numerically stable trigonometric difference kernels.

Every quantity in this package degenerates as the design frequency w
approaches 0 (the basis tends to the cubic Hermite one), and the naive
closed forms divide cancellation-prone differences like w - sin(w) by
each other.  The kernels below compute those differences with small
relative error for every admissible argument, which keeps all downstream
formulas accurate uniformly in w.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Below this threshold the exact cubic-Hermite limit formulas are used
# everywhere instead of the trigonometric closed forms.
SMALL_FREQ_THRESHOLD = 1e-4

_SERIES_CUTOFF = 0.9


class DomainError(ValueError):
    """A numeric argument lies outside the range an operation supports."""


@dataclass(frozen=True)
class Frequency:
    """Design frequency w in radians, restricted to [0, pi].

    ``is_small`` selects the cubic-limit evaluation path; all modules
    branch on this single predicate so the switch is consistent
    package-wide.
    """

    omega0: float

    def __post_init__(self) -> None:
        w = self.omega0
        if not math.isfinite(w) or w < 0.0 or w > math.pi:
            raise DomainError(f"omega0 must lie in [0, pi], got {w!r}")

    @property
    def is_small(self) -> bool:
        return self.omega0 < SMALL_FREQ_THRESHOLD

    def scaled(self, h: float) -> "Frequency":
        """Frequency h*w of the representation on the grid h*Z."""
        if h <= 0.0:
            raise DomainError(f"grid step h must be positive, got {h!r}")
        w = h * self.omega0
        if w > math.pi:
            raise DomainError(
                f"h*omega0 = {w!r} exceeds pi; refine h or lower omega0"
            )
        return Frequency(w)


@dataclass(frozen=True)
class FrequencyList:
    """Ordered annihilation frequencies in [-pi, pi]; repeats raise the order."""

    freqs: tuple[float, ...]

    def __post_init__(self) -> None:
        clean = tuple(float(w) for w in self.freqs)
        for w in clean:
            if not math.isfinite(w) or abs(w) > math.pi:
                raise DomainError(f"annihilation frequency {w!r} outside [-pi, pi]")
        object.__setattr__(self, "freqs", clean)

    def __len__(self) -> int:
        return len(self.freqs)


def x_minus_sin(t: float) -> float:
    """t - sin(t) with eps-level relative accuracy (series below the cutoff)."""
    if abs(t) >= _SERIES_CUTOFF:
        return t - math.sin(t)
    # t^3/6 - t^5/120 + t^7/5040 - ...
    t2 = t * t
    term = t * t2 / 6.0
    total = term
    k = 1
    while True:
        term *= -t2 / ((2 * k + 2) * (2 * k + 3))
        total += term
        k += 1
        if abs(term) <= 1e-18 * abs(total):
            return total


def one_minus_cos(t: float) -> float:
    """1 - cos(t), evaluated as 2 sin^2(t/2) to avoid cancellation."""
    s = math.sin(0.5 * t)
    return 2.0 * s * s


def sin_minus_x_cos(t: float) -> float:
    """sin(t) - t*cos(t), series below the cutoff (leading term t^3/3)."""
    if abs(t) >= _SERIES_CUTOFF:
        return math.sin(t) - t * math.cos(t)
    t2 = t * t
    term = t * t2 / 3.0
    total = term
    k = 1
    while True:
        # (-1)^k * 2(k+1) t^(2k+3) / (2k+3)!
        term *= -t2 * (k + 1) / (k * (2 * k + 2) * (2 * k + 3))
        total += term
        k += 1
        if abs(term) <= 1e-18 * abs(total):
            return total


def s_factor(w: float) -> float:
    """2 sin(w/2) - w cos(w/2), the common denominator of the basis forms.

    Positive for w in (0, pi]; behaves like w^3/12 near 0.
    """
    return 2.0 * sin_minus_x_cos(0.5 * w)
