"""Deterministic SVG rendering of a two-dimensional Bondal-Ruan
stratification: the fundamental square with arrangement lines and faces
colored by their class."""

from __future__ import annotations

import functools
from fractions import Fraction

PALETTE = ("#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
           "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac",
           "#1b9e77", "#7570b3")

SIZE = 420
MARGIN = 30


class UnsupportedDimension(ValueError):
    pass


def _fmt(x):
    # exact rational -> fixed-point decimal string, no float round trip
    v = Fraction(x)
    scaled = v.numerator * 1000 // v.denominator
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    return "%s%d.%03d" % (sign, scaled // 1000, scaled % 1000)


def _to_px(p):
    x = MARGIN + Fraction(p[0]) * SIZE
    y = MARGIN + (1 - Fraction(p[1])) * SIZE
    return _fmt(x), _fmt(y)


def _angle_sort(points, center):
    def half(v):
        dx, dy = v
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def cmp(a, b):
        va = (a[0] - center[0], a[1] - center[1])
        vb = (b[0] - center[0], b[1] - center[1])
        ha, hb = half(va), half(vb)
        if ha != hb:
            return ha - hb
        cross = va[0] * vb[1] - va[1] * vb[0]
        return -1 if cross > 0 else (1 if cross < 0 else 0)

    return sorted(points, key=functools.cmp_to_key(cmp))


def emit_svg(strat, path):
    """Write an SVG of a 2-D stratification: faces colored by class,
    arrangement lines, and a class legend."""
    arr = strat.arrangement
    if arr.dim != 2:
        raise UnsupportedDimension(
            "SVG output requires a 2-dimensional stratification, got dim %d"
            % arr.dim)
    colors = {c: PALETTE[i % len(PALETTE)] for i, c in enumerate(strat.classes)}
    face_class = {}
    for c, ids in strat.class_faces.items():
        for i in ids:
            face_class[i] = c

    parts = ['<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
             'viewBox="0 0 %d %d">' % (SIZE + 2 * MARGIN + 170, SIZE + 2 * MARGIN,
                                       SIZE + 2 * MARGIN + 170, SIZE + 2 * MARGIN)]
    parts.append('<rect x="0" y="0" width="100%" height="100%" fill="white"/>')

    for face in arr.faces:
        color = colors[face_class[face.idx]]
        for pid in face.piece_ids:
            piece = arr.pieces[pid]
            if piece.dim != 2:
                continue
            pts = _angle_sort(list(piece.vertices), piece.barycenter)
            coords = " ".join(",".join(_to_px(p)) for p in pts)
            parts.append('<polygon points="%s" fill="%s" stroke="none"/>'
                         % (coords, color))

    for hp in arr.hyperplanes:
        if hp.wall_only:
            continue
        seg = _clip_line_to_square(hp.normal, hp.level)
        if seg is None:
            continue
        (x1, y1), (x2, y2) = seg
        a = _to_px((x1, y1))
        b = _to_px((x2, y2))
        parts.append('<line x1="%s" y1="%s" x2="%s" y2="%s" '
                     'stroke="black" stroke-width="1.2"/>' % (a + b))

    parts.append('<rect x="%d" y="%d" width="%d" height="%d" fill="none" '
                 'stroke="black" stroke-width="1.5"/>'
                 % (MARGIN, MARGIN, SIZE, SIZE))

    lx = SIZE + 2 * MARGIN + 10
    for i, c in enumerate(strat.classes):
        y = MARGIN + 22 * i
        parts.append('<rect x="%d" y="%d" width="14" height="14" fill="%s" '
                     'stroke="black" stroke-width="0.5"/>' % (lx, y, colors[c]))
        parts.append('<text x="%d" y="%d" font-size="13" '
                     'font-family="monospace">%s</text>' % (lx + 20, y + 12, c))
    parts.append("</svg>")
    with open(path, "w") as fh:
        fh.write("\n".join(parts) + "\n")


def _clip_line_to_square(normal, level):
    """Intersection segment of {<x, v> = level} with [0,1]^2."""
    a, b = normal
    pts = []
    for x in (Fraction(0), Fraction(1)):
        if b != 0:
            y = Fraction(level - a * x, b)
            if 0 <= y <= 1:
                pts.append((x, y))
    for y in (Fraction(0), Fraction(1)):
        if a != 0:
            x = Fraction(level - b * y, a)
            if 0 <= x <= 1:
                pts.append((x, y))
    pts = sorted(set(pts))
    if len(pts) < 2:
        return None
    return pts[0], pts[-1]
