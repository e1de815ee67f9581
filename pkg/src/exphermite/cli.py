"""Command-line front end: basis tables, subdivision, SVG rendering, and
property verification.

Exit codes: 0 success, 1 verification failure, 2 bad flags, 3 domain or
invariant errors, 4 malformed input JSON, 5 unwritable output.
"""

from __future__ import annotations

import argparse
import math
import re
import sys

import numpy as np

from . import __version__
from .basis import phi, phi_deriv
from .curve import reproduction_check
from .document import (
    CurveDocument,
    DocumentFormatError,
    dumps_document,
    format_number,
    loads_document,
    refined_document,
    render_svg,
)
from .frequency import DomainError, Frequency
from .gram import det_scan_min, gram_entries, lower_bound_G, riesz_bounds
from .subdivision import hermite_to_scalar, masks, scalar_refine_step, subdivide

EXIT_VERIFY_FAIL = 1
EXIT_DOMAIN = 3
EXIT_BAD_JSON = 4
EXIT_UNWRITABLE = 5

_PI_FORM = re.compile(r"^(\d+(?:\.\d+)?)?pi(?:/(\d+(?:\.\d+)?))?$", re.IGNORECASE)


def parse_omega0(text: str) -> float:
    """Accept a plain float or the literal form '<p>pi/<q>' (e.g. 3pi/4)."""
    match = _PI_FORM.match(text.strip())
    if match:
        num = float(match.group(1)) if match.group(1) else 1.0
        den = float(match.group(2)) if match.group(2) else 1.0
        return num * math.pi / den
    try:
        return float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a float or '<p>pi/<q>', got {text!r}"
        ) from None


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {path!r}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_UNWRITABLE) from exc


def _load_document(path: str) -> CurveDocument:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {path!r}: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_BAD_JSON) from exc
    try:
        return loads_document(text)
    except DocumentFormatError as exc:
        print(f"error: malformed document: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_BAD_JSON) from exc


def cmd_basis(args: argparse.Namespace) -> int:
    freq = Frequency(args.omega0)
    lo, hi = args.range
    if args.samples < 2:
        raise DomainError(f"samples must be >= 2, got {args.samples}")
    if hi <= lo:
        raise DomainError(f"range upper bound {hi} must exceed lower bound {lo}")
    evaluate = phi_deriv if args.deriv else phi
    rows = ["x,value"]
    for x in np.linspace(lo, hi, args.samples):
        value = evaluate(freq, args.which, float(x))
        rows.append(f"{format_number(x)},{format_number(value)}")
    _write_text(args.out, "\n".join(rows) + "\n")
    return 0


def cmd_subdivide(args: argparse.Namespace) -> int:
    doc = _load_document(args.input)
    curve = doc.curve()
    data = curve.to_hermite_data()
    if args.scheme == "vector":
        refined = subdivide(curve.freq, data, args.levels)
        _write_text(args.out, dumps_document(refined_document(doc, refined)))
        return 0
    ctrl = hermite_to_scalar(curve.freq, 0, data)
    for _ in range(args.levels):
        ctrl = scalar_refine_step(ctrl, curve.freq)
    body = ",\n    ".join(
        f"[{format_number(x)}, {format_number(y)}]"
        for x, y in np.atleast_2d(ctrl.points)
    )
    text = (
        "{\n"
        f'  "version": {doc.version},\n'
        f'  "M": {doc.period},\n'
        f'  "scheme": "scalar",\n'
        f'  "level": {ctrl.level},\n'
        f'  "control_points": [\n    {body}\n  ]\n'
        "}\n"
    )
    _write_text(args.out, text)
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    doc = _load_document(args.input)
    svg = render_svg(doc, samples_per_span=args.samples_per_span,
                     handles=args.handles)
    _write_text(args.out, svg)
    return 0


def _check(name: str, value: float, threshold: float, ok: bool) -> dict:
    return {"name": name, "value": value, "threshold": threshold, "ok": ok}


def _suite_riesz(freq: Frequency) -> list[dict]:
    alpha, beta = riesz_bounds(freq)
    min_det = det_scan_min(freq)
    bound = lower_bound_G(freq)
    return [
        _check("riesz lower bound alpha > 0", alpha, 0.0, alpha > 0.0),
        _check("riesz upper bound beta finite", beta, math.inf,
               math.isfinite(beta) and beta >= alpha),
        _check("min det >= closed-form bound - 1e-12", min_det - bound, -1e-12,
               min_det >= bound - 1e-12),
    ]


def _suite_reproduction(freq: Frequency) -> list[dict]:
    out = []
    for target in ("const", "linear", "cos"):
        err = reproduction_check(freq, target)
        out.append(_check(f"reproduction of {target}", err, 1e-12, err < 1e-12))
    return out


def _suite_masks(freq: Frequency) -> list[dict]:
    triple = masks(freq, 16)
    h = 2.0 ** (-16)
    rescale = np.array([[1.0, 1.0 / h], [h, 1.0]])
    merrien = np.array([[0.5, -0.125], [1.5, -0.25]])
    dist = float(np.abs(triple.hm1 * rescale - merrien).max())
    identity = float(np.abs(triple.h0 - np.eye(2)).max())
    sign = float(
        np.abs(triple.hp1 - triple.hm1 * np.array([[1, -1], [-1, 1]])).max()
    )
    return [
        _check("stationary-limit distance at level 16", dist, 1e-3, dist < 1e-3),
        _check("center mask is identity", identity, 0.0, identity == 0.0),
        _check("off-diagonal sign pattern", sign, 0.0, sign == 0.0),
    ]


def _suite_gram(freq: Frequency) -> list[dict]:
    from scipy.integrate import quad

    g = gram_entries(freq)
    pairs = {
        "a": (g.a, quad(lambda x: phi(freq, 1, x) * phi(freq, 1, x - 1), 0, 1)[0]),
        "b": (g.b, 2 * quad(lambda x: phi(freq, 1, x) ** 2, 0, 1)[0]),
        "c": (g.c, quad(lambda x: phi(freq, 1, x) * phi(freq, 2, x - 1), 0, 1)[0]),
        "d": (g.d, quad(lambda x: phi(freq, 2, x) * phi(freq, 2, x - 1), 0, 1)[0]),
        "e": (g.e, 2 * quad(lambda x: phi(freq, 2, x) ** 2, 0, 1)[0]),
    }
    out = []
    for name, (closed, numeric) in pairs.items():
        err = abs(closed - numeric)
        out.append(_check(f"gram entry {name} vs quadrature", err, 1e-8, err < 1e-8))
    alpha, _ = riesz_bounds(freq)
    out.append(_check("smallest symbol eigenvalue > 0", alpha * alpha, 0.0,
                      alpha > 0.0))
    return out


_SUITES = {
    "riesz": _suite_riesz,
    "reproduction": _suite_reproduction,
    "masks": _suite_masks,
    "gram": _suite_gram,
}


def cmd_verify(args: argparse.Namespace) -> int:
    freq = Frequency(args.omega0)
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    checks: list[dict] = []
    for name in names:
        checks.extend(_SUITES[name](freq))
    width = max(len(c["name"]) for c in checks)
    failed = 0
    for c in checks:
        status = "PASS" if c["ok"] else "FAIL"
        failed += 0 if c["ok"] else 1
        print(
            f"{c['name']:<{width}}  value={c['value']: .6e}  "
            f"threshold={c['threshold']: .6e}  {status}"
        )
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_VERIFY_FAIL if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exphermite",
        description="Exponential Hermite splines: evaluate, subdivide, render, verify.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("basis", help="tabulate a generator as CSV")
    p.add_argument("--omega0", type=parse_omega0, required=True)
    p.add_argument("--which", type=int, choices=(1, 2), default=1)
    p.add_argument("--deriv", action="store_true")
    p.add_argument("--range", type=float, nargs=2, default=(-1.0, 1.0),
                   metavar=("LO", "HI"))
    p.add_argument("--samples", type=int, default=201)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("subdivide", help="refine a curve document")
    p.add_argument("input")
    p.add_argument("--levels", type=int, default=1)
    p.add_argument("--scheme", choices=("vector", "scalar"), default="vector")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_subdivide)

    p = sub.add_parser("render", help="render a curve document to SVG")
    p.add_argument("input")
    p.add_argument("--samples-per-span", type=int, default=64)
    p.add_argument("--handles", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="run property verification suites")
    p.add_argument("--suite", choices=(*_SUITES, "all"), default="all")
    p.add_argument("--omega0", type=parse_omega0, required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("subdivide", "render"):
        if getattr(args, "levels", 0) < 0:
            parser.error("--levels must be nonnegative")
        if getattr(args, "samples_per_span", 1) < 1:
            parser.error("--samples-per-span must be >= 1")
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
