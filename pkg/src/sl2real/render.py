"""Farey tessellation figures and SVG rendering.

The tessellation of the hyperbolic plane by ideal triangles is grown by
mediant bisection: two boundary fractions m1/n1, m2/n2 are joined by a
geodesic exactly when m1*n2 - m2*n1 = +-1, and each round inserts the
mediant of every frontier pair (the right half plus its mirror image).
All combinatorial claims (endpoints, arc counts, crossing labels) are
computed in exact integer arithmetic; floating point enters only when
the finished figure is projected to the disk for SVG output.

Fractions are (m, n) pairs in lowest terms with n >= 0; infinity is
(1, 0).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import atan2, pi, sqrt

from .errors import DepthTooLarge
from .farey import Surd, attracting_fixed_point
from .mat2 import Mat2

__all__ = [
    "MAX_DEPTH",
    "FareyFigure",
    "AxisOverlay",
    "farey_figure",
    "render_farey",
    "render_svg",
]

MAX_DEPTH = 12

Frac = tuple[int, int]
Tri = tuple[Frac, Frac, Frac]


@dataclass(frozen=True)
class AxisOverlay:
    """Translation axis of a hyperbolic matrix across the tessellation.

    Crossed triangles are listed in travel order from the repelling to
    the attracting fixed point, each labeled "L" or "R" by the side of
    the axis holding the triangle's lone vertex.
    """

    attracting: Surd
    repelling: Surd
    crossings: tuple[tuple[Tri, str], ...]


@dataclass(frozen=True)
class FareyFigure:
    depth: int
    arcs: tuple[tuple[Frac, Frac], ...]
    triangles: tuple[Tri, ...]
    axis: AxisOverlay | None


def _mirror(frac: Frac) -> Frac:
    m, n = frac
    if n == 0:
        return (1, 0)
    return (-m, n)


def _is_between(frac: Frac, att: Surd, rep: Surd) -> bool:
    # strictly inside the finite interval with surd endpoints; infinity
    # always lies on the outer arc
    m, n = frac
    if n == 0:
        return False
    return att.compare_rational(m, n) != rep.compare_rational(m, n)


def _travel_key(frac: Frac, att: Surd, rep: Surd) -> float:
    """|(x - rep)/(x - att)|: 0 at the repelling end, large near the
    attracting end, 1 at infinity; monotone along the axis."""
    m, n = frac
    if n == 0:
        return 1.0
    x = m / n
    denom = x - float(att)
    if denom == 0.0:
        return float("inf")
    return abs((x - float(rep)) / denom)


def _axis_overlay(axis_matrix: Mat2, triangles: tuple[Tri, ...]) -> AxisOverlay:
    att = attracting_fixed_point(axis_matrix)
    rep = att.conjugate()
    att_right = att.q > 0  # att - rep = 2*sqrt(d)/q
    ordered = []
    for tri in triangles:
        between = [_is_between(v, att, rep) for v in tri]
        count = sum(between)
        if count == 0 or count == 3:
            continue
        lone_between = count == 1
        # boundary points outside the fixed interval sit on the left of
        # rightward travel, inside on the right; mirrored when the axis
        # runs leftward
        if att_right:
            label = "L" if not lone_between else "R"
        else:
            label = "L" if lone_between else "R"
        pair = [v for v, b in zip(tri, between) if b != lone_between]
        key = sum(_travel_key(v, att, rep) for v in pair) / len(pair)
        ordered.append((key, tri, label))
    ordered.sort(key=lambda item: item[0])
    return AxisOverlay(att, rep, tuple((tri, label) for _, tri, label in ordered))


def farey_figure(depth: int, axis_matrix: Mat2 | None = None) -> FareyFigure:
    """Tessellation after `depth` mediant rounds, optionally with an axis.

    Arc count is 2^(depth+2) - 3 and triangle count 2^(depth+1) - 2.
    """
    if depth < 0 or depth > MAX_DEPTH:
        raise DepthTooLarge(f"depth must be within 0..{MAX_DEPTH}, got {depth}")
    base = ((0, 1), (1, 0))
    arcs: list[tuple[Frac, Frac]] = [base]
    triangles: list[Tri] = []
    frontier: list[tuple[Frac, Frac]] = [base]
    for _ in range(depth):
        nxt: list[tuple[Frac, Frac]] = []
        for u, v in frontier:
            w = (u[0] + v[0], u[1] + v[1])
            arcs += [(u, w), (w, v), (_mirror(u), _mirror(w)), (_mirror(w), _mirror(v))]
            triangles.append((u, w, v))
            triangles.append((_mirror(u), _mirror(w), _mirror(v)))
            nxt += [(u, w), (w, v)]
        frontier = nxt
    axis = None if axis_matrix is None else _axis_overlay(axis_matrix, tuple(triangles))
    return FareyFigure(depth, tuple(arcs), tuple(triangles), axis)


# -- SVG output ------------------------------------------------------

_TINTS = {"L": "#9ecae1", "R": "#fdae6b"}


def _fmt(v: float) -> str:
    return f"{v:.6f}"


def _disk_point(frac: Frac) -> tuple[float, float]:
    # boundary map x -> (2x/(x^2+1), (x^2-1)/(x^2+1)): 0 south, infinity
    # north, 1 east
    m, n = frac
    s = m * m + n * n
    return 2 * m * n / s, (m * m - n * n) / s


def _disk_point_real(x: float) -> tuple[float, float]:
    s = x * x + 1
    return 2 * x / s, (x * x - 1) / s


def _segment(p1: tuple[float, float], p2: tuple[float, float], straight: bool) -> str:
    """Path command from p1 to p2 (math coords; y is flipped for SVG)."""
    x2s, y2s = p2[0], -p2[1]
    if straight:
        return f"L {_fmt(x2s)} {_fmt(y2s)}"
    det = p1[0] * p2[1] - p1[1] * p2[0]
    cx, cy = (p2[1] - p1[1]) / det, (p1[0] - p2[0]) / det
    r = sqrt(max(cx * cx + cy * cy - 1.0, 0.0))
    scx, scy = cx, -cy
    a1 = atan2(-p1[1] - scy, p1[0] - scx)
    a2 = atan2(y2s - scy, x2s - scx)
    delta = a2 - a1
    while delta <= -pi:
        delta += 2 * pi
    while delta > pi:
        delta -= 2 * pi
    sweep = 1 if delta > 0 else 0
    # a geodesic arc orthogonal to the boundary circle always subtends
    # less than half of its own circle, so the large-arc flag is 0
    return f"A {_fmt(r)} {_fmt(r)} 0 0 {sweep} {_fmt(x2s)} {_fmt(y2s)}"


def _antipodal(f1: Frac, f2: Frac) -> bool:
    m1, n1 = f1
    m2, n2 = f2
    u1 = (2 * m1 * n1, m1 * m1 - n1 * n1)
    u2 = (2 * m2 * n2, m2 * m2 - n2 * n2)
    return u1[0] * u2[1] - u1[1] * u2[0] == 0


def _frac_segment(f1: Frac, f2: Frac) -> str:
    return _segment(_disk_point(f1), _disk_point(f2), _antipodal(f1, f2))


def _move_to(p: tuple[float, float]) -> str:
    return f"M {_fmt(p[0])} {_fmt(-p[1])}"


def render_svg(fig: FareyFigure) -> str:
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        'viewBox="-1.05 -1.05 2.1 2.1" width="600" height="600">',
        '<circle class="boundary" cx="0" cy="0" r="1" fill="none" '
        'stroke="#202020" stroke-width="0.006"/>',
    ]
    if fig.axis is not None:
        for tri, label in fig.axis.crossings:
            d = " ".join(
                [
                    _move_to(_disk_point(tri[0])),
                    _frac_segment(tri[0], tri[1]),
                    _frac_segment(tri[1], tri[2]),
                    _frac_segment(tri[2], tri[0]),
                    "Z",
                ]
            )
            parts.append(
                f'<path class="tri-{label}" d="{d}" fill="{_TINTS[label]}" '
                'fill-opacity="0.8" stroke="none"/>'
            )
    for f1, f2 in fig.arcs:
        d = f"{_move_to(_disk_point(f1))} {_frac_segment(f1, f2)}"
        parts.append(
            f'<path class="arc" d="{d}" fill="none" stroke="#404040" '
            'stroke-width="0.004"/>'
        )
    if fig.axis is not None:
        p1 = _disk_point_real(float(fig.axis.repelling))
        p2 = _disk_point_real(float(fig.axis.attracting))
        det = p1[0] * p2[1] - p1[1] * p2[0]
        d = f"{_move_to(p1)} {_segment(p1, p2, abs(det) < 1e-12)}"
        parts.append(
            f'<path class="axis" d="{d}" fill="none" stroke="#d62728" '
            'stroke-width="0.012"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts)


def render_farey(depth: int, axis_matrix: Mat2 | None = None) -> str:
    """SVG document for the depth-d tessellation, optional axis overlay."""
    return render_svg(farey_figure(depth, axis_matrix))
