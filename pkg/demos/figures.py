"""Render the five classical figure configurations to SVG files.

Run: python demos/figures.py [outdir]
"""

import os
import sys

from traversale.render import FIGURES, render_figure

outdir = sys.argv[1] if len(sys.argv) > 1 else "figures-out"
os.makedirs(outdir, exist_ok=True)

for name in sorted(FIGURES):
    path = os.path.join(outdir, f"{name}.svg")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_figure(name))
    print("wrote", path)

print()
print("fig8   quadrangle, diagonal triangle and the harmonic range F, X, G, Y")
print("fig10  the chain of involutions on a line through F")
print("fig13  a line's pole as the meet of two traversales")
print("fig14  tangents from an exterior point; the traversale joins the contacts")
print("fig16  couples of the polarity involution drawn through a conic point")
