"""Curve interchange documents (JSON) and SVG rendering.

The JSON schema is the single on-disk format:

    {"version": 1, "M": 8, "omega0_mode": "auto",
     "points": [[x, y], ...], "tangents": [[dx, dy], ...]}

Numbers are written with 17 significant digits so every double value
survives the round trip, and output is byte-stable for fixed input.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .curve import ClosedHermiteCurve
from .frequency import DomainError


class DocumentFormatError(ValueError):
    """The payload is not a structurally valid curve document."""


@dataclass(frozen=True)
class CurveDocument:
    version: int
    period: int
    points: np.ndarray
    tangents: np.ndarray
    omega0_mode: str = "auto"

    def __post_init__(self) -> None:
        pts = np.asarray(self.points, dtype=float)
        tan = np.asarray(self.tangents, dtype=float)
        if self.omega0_mode != "auto":
            raise DomainError(f"unsupported omega0_mode {self.omega0_mode!r}")
        if len(pts) != self.period or len(tan) != self.period:
            raise DomainError(
                f"points/tangents lists must have length M = {self.period}"
            )
        if not (np.isfinite(pts).all() and np.isfinite(tan).all()):
            raise DomainError("document entries must be finite numbers")
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "tangents", tan)

    def curve(self) -> ClosedHermiteCurve:
        return ClosedHermiteCurve(self.points, self.tangents)

    @classmethod
    def from_curve(cls, curve: ClosedHermiteCurve) -> "CurveDocument":
        return cls(1, curve.period, curve.points, curve.tangents)


def format_number(x: float) -> str:
    """17 significant digits; negative zero is canonicalized so that
    serializing a reparsed document reproduces the bytes."""
    return format(float(x) + 0.0, ".17g")


def _pairs(rows: np.ndarray) -> str:
    return ", ".join(
        f"[{format_number(x)}, {format_number(y)}]" for x, y in rows
    )


def dumps_document(doc: CurveDocument) -> str:
    """Serialize with fixed key order and 17-significant-digit numbers."""
    return (
        "{\n"
        f'  "version": {doc.version},\n'
        f'  "M": {doc.period},\n'
        f'  "omega0_mode": "{doc.omega0_mode}",\n'
        f'  "points": [{_pairs(doc.points)}],\n'
        f'  "tangents": [{_pairs(doc.tangents)}]\n'
        "}\n"
    )


def _require(payload: dict, key: str, kinds) -> object:
    if key not in payload:
        raise DocumentFormatError(f"missing document key {key!r}")
    value = payload[key]
    # bool is an int subclass but never a valid document value
    if isinstance(value, bool) or not isinstance(value, kinds):
        raise DocumentFormatError(f"document key {key!r} has wrong type")
    return value


def _point_list(payload: dict, key: str) -> list[list[float]]:
    rows = _require(payload, key, list)
    for row in rows:
        if (
            not isinstance(row, list)
            or len(row) != 2
            or not all(
                isinstance(v, (int, float)) and not isinstance(v, bool)
                for v in row
            )
        ):
            raise DocumentFormatError(f"{key!r} must be a list of [x, y] pairs")
    return rows


def loads_document(text: str) -> CurveDocument:
    """Parse and validate; format problems raise DocumentFormatError,
    invariant violations raise DomainError."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(payload, dict):
        raise DocumentFormatError("document root must be a JSON object")
    version = _require(payload, "version", int)
    period = _require(payload, "M", int)
    mode = _require(payload, "omega0_mode", str)
    points = _point_list(payload, "points")
    tangents = _point_list(payload, "tangents")
    return CurveDocument(version, period, np.array(points, dtype=float),
                         np.array(tangents, dtype=float), mode)


def refined_document(doc: CurveDocument, refined) -> CurveDocument:
    """Wrap refined periodic Hermite samples back into a document.

    The refined grid has spacing h = M / M'; reparametrizing to unit
    spacing multiplies the tangents by h, after which omega0 = 2 pi / M'
    again holds automatically.
    """
    m_new = len(refined)
    h = doc.period / m_new
    return CurveDocument(doc.version, m_new, refined.values, h * refined.derivs)


# --- SVG output -----------------------------------------------------------

VIEWPORT = 1000.0
MARGIN_FRACTION = 0.05


def _fit(points: np.ndarray):
    """Uniform map from data coordinates into the fixed square viewport
    with a margin; y is flipped so the curve appears in the usual
    orientation."""
    lo = points.min(axis=0)
    hi = points.max(axis=0)
    span = float(max(hi[0] - lo[0], hi[1] - lo[1]))
    if span <= 0.0:
        span = 1.0
    margin = MARGIN_FRACTION * VIEWPORT
    scale = (VIEWPORT - 2.0 * margin) / span
    center = 0.5 * (lo + hi)

    def to_px(p):
        x = VIEWPORT / 2.0 + (p[0] - center[0]) * scale
        y = VIEWPORT / 2.0 - (p[1] - center[1]) * scale
        return x, y

    return to_px


def _fmt(v: float) -> str:
    return format(v, ".6f")


def render_svg(doc: CurveDocument, samples_per_span: int = 64,
               handles: bool = False) -> str:
    """Deterministic SVG 1.1 picture: one closed path through a dense
    evaluation of the curve, optionally with one cross marker and one
    tangent line per control point."""
    if samples_per_span < 1:
        raise DomainError(
            f"samples_per_span must be >= 1, got {samples_per_span!r}"
        )
    curve = doc.curve()
    m = curve.period
    ts = np.arange(m * samples_per_span) / samples_per_span
    samples = np.array([curve.eval(float(t))[0] for t in ts])
    to_px = _fit(samples)

    coords = [to_px(p) for p in samples]
    path = "M " + " L ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in coords) + " Z"
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{VIEWPORT:.0f}" height="{VIEWPORT:.0f}" '
        f'viewBox="0 0 {VIEWPORT:.0f} {VIEWPORT:.0f}">',
        f'<path d="{path}" fill="none" stroke="black" stroke-width="2"/>',
    ]
    if handles:
        arm = 0.008 * VIEWPORT
        for point, tangent in zip(doc.points, doc.tangents):
            x, y = to_px(point)
            tip = to_px(point + tangent)
            lines.append(
                f'<line class="handle" x1="{_fmt(x)}" y1="{_fmt(y)}" '
                f'x2="{_fmt(tip[0])}" y2="{_fmt(tip[1])}" '
                f'stroke="steelblue" stroke-width="1.5"/>'
            )
            lines.append(
                f'<path class="ctrl" d="M {_fmt(x - arm)},{_fmt(y)} '
                f'L {_fmt(x + arm)},{_fmt(y)} M {_fmt(x)},{_fmt(y - arm)} '
                f'L {_fmt(x)},{_fmt(y + arm)}" stroke="crimson" '
                f'stroke-width="1.5" fill="none"/>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
