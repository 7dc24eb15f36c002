"""Deterministic SVG rendering of point sets, hulls, and blocker sets.

Output is integer-only and element order is fixed, so renders are stable
byte-for-byte across runs and diffable in CI.
"""

from __future__ import annotations

from .geometry import PointSet, SegmentId, all_segments, convex_hull


def render_svg(ps: PointSet, blockers: tuple[SegmentId, ...] = ()) -> str:
    """Draw every spanned segment faintly, the blockers emphasised, the hull
    dashed, and the points on top.  The viewBox is the bounding box plus a
    5% margin; y is flipped so the drawing matches plane coordinates."""
    xs = [p.x for p in ps.points]
    ys = [p.y for p in ps.points]
    min_x, max_x = min(xs), max(xs)
    min_y, max_y = min(ys), max(ys)
    flip = min_y + max_y

    def fy(y: int) -> int:
        return flip - y

    w = max(max_x - min_x, 1)
    h = max(max_y - min_y, 1)
    mx = max(1, w * 5 // 100)
    my = max(1, h * 5 // 100)
    view = f"{min_x - mx} {min_y - my} {w + 2 * mx} {h + 2 * my}"
    r = max(1, max(w, h) // 100)
    stroke_thin = max(1, r // 2)
    stroke_thick = 2 * r

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{view}">',
    ]
    blocker_set = {tuple(b) for b in blockers}
    for i, j in all_segments(ps.n):
        if (i, j) in blocker_set:
            continue
        p, q = ps[i], ps[j]
        lines.append(
            f'<line x1="{p.x}" y1="{fy(p.y)}" x2="{q.x}" y2="{fy(q.y)}" '
            f'stroke="#bbbbbb" stroke-width="{stroke_thin}"/>'
        )
    hull = convex_hull(ps).hull
    pts_attr = " ".join(f"{ps[i].x},{fy(ps[i].y)}" for i in hull)
    lines.append(
        f'<polygon points="{pts_attr}" fill="none" stroke="#333333" '
        f'stroke-width="{stroke_thin}" stroke-dasharray="{4 * stroke_thin} {4 * stroke_thin}"/>'
    )
    for i, j in sorted(blocker_set):
        p, q = ps[i], ps[j]
        lines.append(
            f'<line x1="{p.x}" y1="{fy(p.y)}" x2="{q.x}" y2="{fy(q.y)}" '
            f'stroke="#cc0000" stroke-width="{stroke_thick}"/>'
        )
    for idx, p in enumerate(ps.points):
        lines.append(f'<circle cx="{p.x}" cy="{fy(p.y)}" r="{2 * r}" fill="#000000"/>')
        lines.append(
            f'<text x="{p.x + 2 * r}" y="{fy(p.y) - 2 * r}" '
            f'font-size="{6 * r}">{idx}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
