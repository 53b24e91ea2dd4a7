#!/usr/bin/env python3
"""Render a small gallery of drawings to SVG files.

Writes into --out-dir (default ./gallery): the two drawings of one
combinatorial triangulation on a nine-point set, all drawings of the
one-ring chain pair on its 12-point double chain, and a band structure
on nested triangular layers.
"""

import argparse
import pathlib

from redraw.comb import build_k_nested_double_chain, build_k_nested_regular
from redraw.drawings import GeomTriangulation, count_drawings, render_svg, to_comb
from redraw.pointsets import PointSet, gen_double_chain, gen_nested_triangles

NINE = ((30, 50), (0, 0), (60, 0), (20, 15), (26, 25), (34, 25),
        (40, 15), (35, 10), (25, 10))
NINE_A = [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (0, 5), (1, 3), (1, 7),
          (1, 8), (2, 5), (2, 6), (2, 7), (3, 4), (4, 5), (5, 6), (6, 7),
          (7, 8), (3, 8), (3, 5), (3, 6), (3, 7)]
NINE_B = [(0, 1), (0, 2), (1, 2), (0, 4), (0, 5), (0, 6), (1, 4), (1, 8),
          (1, 3), (2, 6), (2, 7), (2, 8), (4, 5), (5, 6), (6, 7), (7, 8),
          (3, 8), (3, 4), (4, 6), (4, 7), (4, 8)]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", default="gallery")
    args = ap.parse_args()
    out = pathlib.Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    ps9 = PointSet(NINE)
    for name, edges in (("nine_a", NINE_A), ("nine_b", NINE_B)):
        (out / f"{name}.svg").write_text(render_svg(GeomTriangulation(ps9, edges)))

    t1 = build_k_nested_double_chain(1)
    _, wits = count_drawings(t1, gen_double_chain(6, 6), witnesses=True)
    for i, w in enumerate(wits):
        (out / f"chain_pair_{i}.svg").write_text(render_svg(w))

    band = build_k_nested_regular(9)
    _, wits = count_drawings(band, gen_nested_triangles(9), witnesses=True)
    (out / "band.svg").write_text(render_svg(wits[0]))

    print(f"wrote {len(list(out.glob('*.svg')))} files to {out}/")


if __name__ == "__main__":
    main()
