"""SVG pictures of a cone, its lattice points and its atoms.

Drawing is the only place where exact numbers are turned into floats, and
the floats never feed back into any decision.  Coordinates are rounded to 12
significant digits so that the SVG bytes depend only on the inputs.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.figure import Figure  # noqa: E402

from .cones import ConeSpec, FullPlane, HalfPlane, Ray, Sector  # noqa: E402
from .exact import to_float  # noqa: E402

SVG_PARAMS = {"svg.hashsalt": "rcmonoid", "svg.fonttype": "none", "path.simplify": False}


def _f(x) -> float:
    return float(f"{to_float(x):.12g}")


def _direction(r: Ray) -> tuple[float, float]:
    u, w = (_f(t) for t in r.components())
    n = math.hypot(u, w)
    return u / n, w / n


def _region(c: ConeSpec, far: float) -> list[tuple[float, float]]:
    if isinstance(c, FullPlane):
        return [(-far, -far), (far, -far), (far, far), (-far, far)]
    if isinstance(c, HalfPlane):
        dx, dy = _direction(c.boundary)
        nx, ny = -dy, dx
        return [
            (far * dx, far * dy),
            (far * (dx + nx), far * (dy + ny)),
            (far * (nx - dx), far * (ny - dy)),
            (-far * dx, -far * dy),
        ]
    lx, ly = _direction(c.low)
    hx, hy = _direction(c.high)
    mx, my = lx + hx, ly + hy
    m = math.hypot(mx, my)
    # the sector angle is below pi, so the bisector is well defined
    return [(0.0, 0.0), (far * lx, far * ly), (2 * far * mx / m, 2 * far * my / m), (far * hx, far * hy)]


def _rays(c: ConeSpec) -> list[tuple[tuple[float, float], bool]]:
    if isinstance(c, FullPlane):
        return []
    return [(_direction(r), r.included) for r in c.rays()]


def cone_figure(c: ConeSpec, bound: int, atoms, title: str = "") -> Figure:
    """Shaded cone clipped to the box, members dark, atoms highlighted."""
    with plt.rc_context(SVG_PARAMS):
        fig = Figure(figsize=(6, 6))
        ax = fig.add_subplot(1, 1, 1)
        pad = 0.6
        lim = bound + pad
        far = 4.0 * (bound + 1)
        ax.fill(*zip(*_region(c, far)), color="#cfe3f5", zorder=0, gid="region")
        members, others = [], []
        for x in range(-bound, bound + 1):
            for y in range(-bound, bound + 1):
                (members if c.contains((x, y)) else others).append((x, y))
        if others:
            ax.scatter(*zip(*others), s=6, color="#bbbbbb", zorder=2, gid="lattice")
        if members:
            ax.scatter(*zip(*members), s=10, color="#1f4e79", zorder=3, gid="members")
        for (dx, dy), inc in _rays(c):
            ax.plot([0, far * dx], [0, far * dy], color="#1f4e79", linewidth=1.4,
                    linestyle="-" if inc else "--", zorder=1)
        pts = list(atoms)
        xs = [p[0] for p in pts]
        ys = [p[1] for p in pts]
        ax.scatter(xs, ys, s=60, facecolor="#d62728", edgecolor="black", zorder=4, gid="atoms")
        ax.set_xlim(-lim, lim)
        ax.set_ylim(-lim, lim)
        ax.set_aspect("equal")
        ax.axhline(0, color="black", linewidth=0.5, zorder=1)
        ax.axvline(0, color="black", linewidth=0.5, zorder=1)
        if title:
            ax.set_title(title)
        fig.tight_layout()
    return fig


def save_svg(fig: Figure, path) -> None:
    with plt.rc_context(SVG_PARAMS):
        fig.savefig(path, format="svg", metadata={"Date": None, "Creator": None})


def count_highlighted(svg_text: str) -> int:
    """Number of atom markers in an SVG written by :func:`save_svg`."""
    start = svg_text.find('<g id="atoms">')
    if start < 0:
        return 0
    end = svg_text.find("</g>", start)
    return svg_text.count("<use ", start, end)
