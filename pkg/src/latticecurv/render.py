"""Deterministic SVG drawings of bond graphs and their triangulation chords."""

from __future__ import annotations

from .bondgraph import BondGraph, EdgeClass
from .curvature import puiseux_curvature
from .triangulation import TriGraph

SCALE = 60.0  # pixels per unit length
RADIUS = 0.12

EDGE_COLOURS = {
    EdgeClass.REGULAR_INTERIOR: "#333333",
    EdgeClass.REGULAR_BOUNDARY: "#1f4e9c",
    EdgeClass.OUTER_WIRE: "#d9822b",
    EdgeClass.INNER_WIRE: "#2e8b57",
}
CHORD_COLOUR = "#d62728"
BOUNDARY_FILL = "#ffffff"
INTERIOR_FILL = "#000000"
CURVATURE_FILLS = {"neg": "#3b6fd6", "zero": "#bbbbbb", "pos": "#d6453b"}


def _f(v: float) -> str:
    s = f"{v:.4f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(T: TriGraph, color_by: str = "class", labels: bool = False) -> str:
    """SVG text; vertices as circles, bonds solid by edge class, chords dashed red.

    ``color_by="class"`` fills boundary particles white and interior ones
    black; ``"curvature"`` colours by the sign of K and labels each vertex
    with its value.
    """
    if color_by not in ("class", "curvature"):
        raise ValueError(f"unknown colouring {color_by!r}")
    G: BondGraph = T.base
    pts = G.config.points
    if pts:
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    else:
        lo_x = hi_x = lo_y = hi_y = 0.0
    w, h = hi_x - lo_x, hi_y - lo_y
    span = max(w, h, 1.0)
    margin = 0.1 * span
    vx, vy = lo_x - margin, -(hi_y + margin)
    vw, vh = w + 2 * margin, h + 2 * margin

    def X(x):
        return _f(SCALE * x)

    def Y(y):
        return _f(-SCALE * y)

    out = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_f(SCALE * vx)} {_f(SCALE * vy)} {_f(SCALE * vw)} {_f(SCALE * vh)}" '
        f'width="{_f(SCALE * vw)}" height="{_f(SCALE * vh)}">'
    ]
    stroke = _f(0.04 * SCALE)
    for u, v in G.edges:
        cls = G.edge_class[(u, v)]
        out.append(
            f'<line x1="{X(pts[u][0])}" y1="{Y(pts[u][1])}" x2="{X(pts[v][0])}" y2="{Y(pts[v][1])}" '
            f'stroke="{EDGE_COLOURS[cls]}" stroke-width="{stroke}" class="{cls.value}"/>'
        )
    for u, v in T.chords:
        out.append(
            f'<line x1="{X(pts[u][0])}" y1="{Y(pts[u][1])}" x2="{X(pts[v][0])}" y2="{Y(pts[v][1])}" '
            f'stroke="{CHORD_COLOUR}" stroke-width="{stroke}" stroke-dasharray="{_f(0.1 * SCALE)}" class="chord"/>'
        )
    K = puiseux_curvature(T) if color_by == "curvature" else None
    for x, (px, py) in enumerate(pts):
        if K is None:
            fill = BOUNDARY_FILL if x in G.boundary_vertices else INTERIOR_FILL
        else:
            fill = CURVATURE_FILLS["neg" if K[x] < 0 else "pos" if K[x] > 0 else "zero"]
        out.append(
            f'<circle cx="{X(px)}" cy="{Y(py)}" r="{_f(RADIUS * SCALE)}" fill="{fill}" '
            f'stroke="#000000" stroke-width="{_f(0.02 * SCALE)}"/>'
        )
        if labels or K is not None:
            text = str(K[x]) if K is not None else str(x)
            out.append(
                f'<text x="{X(px + 1.3 * RADIUS)}" y="{Y(py + 1.3 * RADIUS)}" '
                f'font-size="{_f(0.25 * SCALE)}" font-family="sans-serif">{text}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"
