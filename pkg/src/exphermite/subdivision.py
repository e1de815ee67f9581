"""Level-dependent dyadic Hermite subdivision and the derived scalar
four-point scheme.

The vector scheme is interpolatory: each step keeps the coarse samples and
inserts the value/derivative of the local Hermite interpolant at span
midpoints.  Because the interpolant lives on a grid of spacing 2^-j, the
insertion matrices depend on the level through the halved frequency
w / 2^j, which is what lets the scheme reproduce ellipses at every level.
The scalar scheme transports the same refinement to Bezier control points
through the Hermite <-> Bezier change of variables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .basis import HermiteData, phi_rescaled, phi_rescaled_deriv
from .bezier import conversion_ratio
from .frequency import Frequency, s_factor, x_minus_sin


@dataclass(frozen=True)
class MaskTriple:
    """The three 2x2 matrices of the level-j insertion rule.

    h0 is the identity (coarse samples are kept); hp1 equals hm1 with both
    off-diagonal entries negated.  Rows/columns follow the convention in
    which the odd-sample update reads
        a[2n+1] = hp1 @ a[n] + hm1 @ a[n+1].
    """

    level: int
    hm1: np.ndarray
    h0: np.ndarray
    hp1: np.ndarray
    level_freq: Frequency


def masks(freq: Frequency, j: int) -> MaskTriple:
    """Insertion masks for the refinement from grid 2^-j to grid 2^-(j+1),
    built from the generators at the level frequency w/2^j."""
    if j < 0:
        raise ValueError(f"level must be nonnegative, got {j!r}")
    h = 2.0 ** (-j)
    level_freq = Frequency(freq.omega0 * h)
    w = level_freq.omega0
    if level_freq.is_small:
        # cubic-limit (stationary) entries, scaled to the level grid
        top = h / 8.0
        bot = 1.5 / h
        hm1 = np.array([[0.5, -top], [bot, -0.25]])
        hp1 = np.array([[0.5, top], [-bot, -0.25]])
    else:
        s = s_factor(w)
        top = math.tan(0.25 * w) / (2.0 * w) * h
        quarter_sin = math.sin(0.25 * w)
        bot = 2.0 * w * quarter_sin * quarter_sin / s / h
        diag = -x_minus_sin(0.5 * w) / s
        hm1 = np.array([[0.5, -top], [bot, diag]])
        hp1 = np.array([[0.5, top], [-bot, diag]])
    return MaskTriple(j, hm1, np.eye(2), hp1, level_freq)


def _node_matrix(data: HermiteData) -> np.ndarray:
    """Stack samples as rows of (value, derivative) blocks: shape (L, 2)
    for scalars, (L, 2, dim) for points."""
    return np.stack([data.values, data.derivs], axis=1)


def _from_node_matrix(nodes: np.ndarray, periodic: bool) -> HermiteData:
    return HermiteData(nodes[:, 0], nodes[:, 1], periodic=periodic)


def refine_step(data: HermiteData, mask: MaskTriple) -> HermiteData:
    """One dyadic step: even output slots copy the input bitwise; each odd
    slot is the local Hermite interpolant of the bracketing nodes evaluated
    at the span midpoint (value and derivative)."""
    if len(data) < 2 and not data.periodic:
        raise ValueError("refinement needs at least two non-periodic samples")
    nodes = _node_matrix(data)
    left = nodes if data.periodic else nodes[:-1]
    right = np.roll(nodes, -1, axis=0) if data.periodic else nodes[1:]
    odd = np.einsum("ij,njd->nid", mask.hp1, left.reshape(left.shape[0], 2, -1)) \
        + np.einsum("ij,njd->nid", mask.hm1, right.reshape(right.shape[0], 2, -1))
    odd = odd.reshape(left.shape)
    out_len = 2 * len(data) if data.periodic else 2 * len(data) - 1
    out = np.empty((out_len,) + nodes.shape[1:])
    out[0::2] = nodes
    out[1::2] = odd
    return _from_node_matrix(out, data.periodic)


def subdivide(freq: Frequency, data0: HermiteData, levels: int) -> HermiteData:
    """Run ``levels`` dyadic steps; entry n of the result holds the value
    and derivative of the Hermite interpolant of data0 at n / 2^levels."""
    if levels < 0:
        raise ValueError(f"levels must be nonnegative, got {levels!r}")
    data = data0
    for j in range(levels):
        data = refine_step(data, masks(freq, j))
    return data


def refinement_mask_general(freq: Frequency, h: float, m: int, n: int) -> np.ndarray:
    """Two-scale matrix relating the grid-h generators to the grid-h/m ones:

        [[phi1^h(n h/m),   (phi1^h)'(n h/m)],
         [phi2^h(n h/m),   (phi2^h)'(n h/m)]]

    Zero for |n| >= m by the support of the generators; the m = 2 case is
    the transpose of the closed-form insertion masks.
    """
    if m < 2:
        raise ValueError(f"arity m must be >= 2, got {m!r}")
    x = n * h / m
    return np.array(
        [
            [phi_rescaled(freq, h, 1, x), phi_rescaled_deriv(freq, h, 1, x)],
            [phi_rescaled(freq, h, 2, x), phi_rescaled_deriv(freq, h, 2, x)],
        ]
    )


@dataclass(frozen=True)
class ScalarControl:
    """Bezier control points of the level-j representation: the node n of
    the Hermite data owns points[2n] (incoming handle) and points[2n+1]
    (outgoing handle), so there are twice as many points as nodes."""

    points: np.ndarray
    level: int
    periodic: bool = False

    def __post_init__(self) -> None:
        pts = np.asarray(self.points, dtype=float)
        if len(pts) % 2 != 0:
            raise ValueError("control points come in per-node pairs")
        object.__setattr__(self, "points", pts)

    def node_count(self) -> int:
        return len(self.points) // 2


def _conversion_matrix(freq: Frequency, j: int) -> np.ndarray:
    """M_j mapping (value, derivative) to the node's two control points."""
    h = 2.0 ** (-j)
    offset = conversion_ratio(Frequency(freq.omega0 * h)) * h
    return np.array([[1.0, -offset], [1.0, offset]])


def scalar_conversion(freq: Frequency, j: int, value, deriv):
    """Control-point pair of one node at level j:
    (value - lam_j 2^-j deriv, value + lam_j 2^-j deriv)."""
    mat = _conversion_matrix(freq, j)
    return (
        mat[0, 0] * value + mat[0, 1] * deriv,
        mat[1, 0] * value + mat[1, 1] * deriv,
    )


def scalar_conversion_inverse(freq: Frequency, j: int, p_even, p_odd):
    """Recover (value, derivative) from a node's control-point pair."""
    h = 2.0 ** (-j)
    offset = conversion_ratio(Frequency(freq.omega0 * h)) * h
    return 0.5 * (p_even + p_odd), 0.5 * (p_odd - p_even) / offset


def hermite_to_scalar(freq: Frequency, j: int, data: HermiteData) -> ScalarControl:
    """Convert level-j Hermite samples to their Bezier control polygon."""
    nodes = _node_matrix(data).reshape(len(data), 2, -1)
    mat = _conversion_matrix(freq, j)
    pts = np.einsum("ij,njd->nid", mat, nodes).reshape(2 * len(data), -1)
    if data.values.ndim == 1:
        pts = pts[:, 0]
    return ScalarControl(pts, j, data.periodic)


def scalar_to_hermite(freq: Frequency, ctrl: ScalarControl) -> HermiteData:
    """Inverse of hermite_to_scalar at the control polygon's own level."""
    pts = ctrl.points.reshape(ctrl.node_count(), 2, -1)
    inv = np.linalg.inv(_conversion_matrix(freq, ctrl.level))
    nodes = np.einsum("ij,njd->nid", inv, pts)
    values, derivs = nodes[:, 0], nodes[:, 1]
    if ctrl.points.ndim == 1:
        values, derivs = values[:, 0], derivs[:, 0]
    return HermiteData(values, derivs, periodic=ctrl.periodic)


def scalar_refine_step(pts: ScalarControl, freq: Frequency) -> ScalarControl:
    """One step of the scalar four-point scheme.

    The rules are the vector ones conjugated by the level conversion
    matrices, so converting Hermite data to control points and refining
    commutes with refining the Hermite data and converting afterwards.
    Old control points are discarded (the scheme is approximating).
    """
    j = pts.level
    mask = masks(freq, j)
    m_next = _conversion_matrix(freq, j + 1)
    m_inv = np.linalg.inv(_conversion_matrix(freq, j))
    even_rule = m_next @ m_inv
    odd_left = m_next @ mask.hp1 @ m_inv
    odd_right = m_next @ mask.hm1 @ m_inv

    blocks = pts.points.reshape(pts.node_count(), 2, -1)
    left = blocks if pts.periodic else blocks[:-1]
    right = np.roll(blocks, -1, axis=0) if pts.periodic else blocks[1:]
    even = np.einsum("ij,njd->nid", even_rule, blocks)
    odd = np.einsum("ij,njd->nid", odd_left, left) \
        + np.einsum("ij,njd->nid", odd_right, right)
    n_out = 2 * pts.node_count() if pts.periodic else 2 * pts.node_count() - 1
    out = np.empty((n_out, 2, blocks.shape[2]))
    out[0::2] = even
    out[1::2] = odd
    flat = out.reshape(2 * n_out, -1)
    if pts.points.ndim == 1:
        flat = flat[:, 0]
    return ScalarControl(flat, j + 1, pts.periodic)
