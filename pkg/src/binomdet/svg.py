"""SVG plots of a start/end point configuration, optionally with a path tuple."""
from __future__ import annotations

from itertools import permutations
from typing import Optional, Sequence
from xml.sax.saxutils import escape

from .lattice import LatticePath, PointConfiguration
from .oracle import enumerate_tuples

UNIT = 32
MARGIN = 1
PATH_COLORS = ("#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf")


def first_tuple(config: PointConfiguration) -> Optional[tuple]:
    """The first non-intersecting tuple, identity permutation preferred."""
    for w in permutations(range(config.p)):
        found = enumerate_tuples(config, w)
        if found:
            return found[0].w, found[0].paths
    return None


def render_configuration(config: PointConfiguration, paths: Optional[Sequence[LatticePath]] = None,
                         title: str = "") -> str:
    pts = list(config.starts) + list(config.ends)
    x0 = min(p.x for p in pts) - MARGIN
    x1 = max(p.x for p in pts) + MARGIN
    y0 = min(p.y for p in pts) - MARGIN
    y1 = max(p.y for p in pts) + MARGIN
    w = (x1 - x0) * UNIT + 2 * UNIT
    h = (y1 - y0) * UNIT + 2 * UNIT + (UNIT if title else 0)
    top = UNIT + (UNIT if title else 0)

    def X(x):
        return (x - x0) * UNIT + UNIT

    def Y(y):
        return (y1 - y) * UNIT + top

    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
           '<rect width="100%" height="100%" fill="white"/>']
    if title:
        out.append(f'<text x="{UNIT}" y="{UNIT}" font-family="monospace" font-size="14">{escape(title)}</text>')
    out.append('<g stroke="#dddddd" stroke-width="1">')
    for x in range(x0, x1 + 1):
        out.append(f'<line x1="{X(x)}" y1="{Y(y0)}" x2="{X(x)}" y2="{Y(y1)}"/>')
    for y in range(y0, y1 + 1):
        out.append(f'<line x1="{X(x0)}" y1="{Y(y)}" x2="{X(x1)}" y2="{Y(y)}"/>')
    out.append("</g>")
    lo, hi = max(x0, y0), min(x1, y1)
    if lo <= hi:
        out.append(f'<line x1="{X(lo)}" y1="{Y(lo)}" x2="{X(hi)}" y2="{Y(hi)}" '
                   'stroke="#888888" stroke-dasharray="4 4"/>')
    if paths:
        for n, pth in enumerate(paths):
            coords = " ".join(f"{X(p.x)},{Y(p.y)}" for p in pth.points)
            out.append(f'<polyline points="{coords}" fill="none" stroke="{PATH_COLORS[n % len(PATH_COLORS)]}" '
                       'stroke-width="3" stroke-linejoin="round"/>')
    for n, b in enumerate(config.ends, 1):
        out.append(f'<circle cx="{X(b.x)}" cy="{Y(b.y)}" r="6" fill="#1f77b4"/>')
        out.append(f'<text x="{X(b.x) + 8}" y="{Y(b.y) + 16}" font-family="monospace" font-size="12" '
                   f'fill="#1f77b4">B{n}</text>')
    for n, a in enumerate(config.starts, 1):
        out.append(f'<circle cx="{X(a.x)}" cy="{Y(a.y)}" r="6" fill="black"/>')
        out.append(f'<text x="{X(a.x) + 8}" y="{Y(a.y) - 8}" font-family="monospace" font-size="12">'
                   f'A{n}({a.x},{a.y})</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
