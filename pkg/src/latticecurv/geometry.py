"""Small planar predicates used by face tracing and triangulation."""

from __future__ import annotations

import math

TWO_PI = 2.0 * math.pi


def cross(o, a, b) -> float:
    """z-component of (a - o) x (b - o); positive for a left turn o->a->b."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def signed_area(poly) -> float:
    s = 0.0
    n = len(poly)
    for k in range(n):
        x0, y0 = poly[k]
        x1, y1 = poly[(k + 1) % n]
        s += x0 * y1 - x1 * y0
    return 0.5 * s


def winding_number(p, poly) -> int:
    """Winding number of a closed polyline around ``p`` (``p`` not on it)."""
    wn = 0
    px, py = p
    n = len(poly)
    for k in range(n):
        a = poly[k]
        b = poly[(k + 1) % n]
        if a[1] <= py:
            if b[1] > py and cross(a, b, p) > 0:
                wn += 1
        elif b[1] <= py and cross(a, b, p) < 0:
            wn -= 1
    return wn


def point_on_segment(p, a, b, tol: float) -> bool:
    ax, ay = a
    bx, by = b
    dx, dy = bx - ax, by - ay
    ll = dx * dx + dy * dy
    if ll == 0.0:
        return math.hypot(p[0] - ax, p[1] - ay) <= tol
    t = ((p[0] - ax) * dx + (p[1] - ay) * dy) / ll
    t = min(1.0, max(0.0, t))
    return math.hypot(p[0] - ax - t * dx, p[1] - ay - t * dy) <= tol


def segments_touch(a, b, c, d, tol: float) -> bool:
    """Closed segments [a,b] and [c,d] share a point (within ``tol``)."""
    d1 = cross(c, d, a)
    d2 = cross(c, d, b)
    d3 = cross(a, b, c)
    d4 = cross(a, b, d)
    if ((d1 > tol and d2 < -tol) or (d1 < -tol and d2 > tol)) and (
        (d3 > tol and d4 < -tol) or (d3 < -tol and d4 > tol)
    ):
        return True
    return (
        point_on_segment(a, c, d, tol)
        or point_on_segment(b, c, d, tol)
        or point_on_segment(c, a, b, tol)
        or point_on_segment(d, a, b, tol)
    )


def angle_ccw(frm: float, to: float) -> float:
    """Counterclockwise angle in [0, 2pi) that rotates direction ``frm`` onto ``to``."""
    return (to - frm) % TWO_PI
