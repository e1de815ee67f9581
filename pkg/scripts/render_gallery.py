"""Write demo documents and SVG renders: circle, ellipse, and a cusp.

Usage: python scripts/render_gallery.py [outdir]
"""

import pathlib
import sys

import numpy as np

from exphermite import CurveDocument, dumps_document, render_svg, unit_circle


def main() -> None:
    outdir = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "gallery")
    outdir.mkdir(parents=True, exist_ok=True)

    circle = unit_circle(8)
    ellipse = circle.affine(np.diag([2.0, 1.0]), np.zeros(2))
    cusp_tangents = circle.tangents.copy()
    cusp_tangents[2] = 0.0
    shapes = {
        "circle": CurveDocument.from_curve(circle),
        "ellipse": CurveDocument.from_curve(ellipse),
        "cusp": CurveDocument(1, 8, circle.points, cusp_tangents),
    }
    for name, doc in shapes.items():
        (outdir / f"{name}.json").write_text(dumps_document(doc))
        (outdir / f"{name}.svg").write_text(
            render_svg(doc, samples_per_span=96, handles=True)
        )
        print(f"wrote {outdir / name}.json and .svg")


if __name__ == "__main__":
    main()
