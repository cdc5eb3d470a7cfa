"""SVG and TikZ pictures of the repetitive polygon with a set of diagonals."""

from __future__ import annotations

import math
from dataclasses import dataclass

from repclus.diagrams import DiagonalSet
from repclus.polygon import PolygonParams
from repclus.quiver import UnknownFormat

__all__ = ["draw", "layout", "Layout", "render_png"]

Point = tuple[float, float]


@dataclass(frozen=True)
class Layout:
    """Drawing primitives on the unit circle, y axis pointing up."""

    vertices: list[Point]
    labels: list[tuple[Point, str]]
    arcs: list[tuple[Point, Point, Point]]  # start, control, end
    chords: list[tuple[Point, Point, str]]
    region_labels: list[tuple[Point, str]]


def _boundary_count(P: PolygonParams) -> int:
    return P.N if P.p == 1 else P.p * (P.n + 2)


def _position(P: PolygonParams, label: int, region: int) -> int:
    return ((region - 1) * (P.n + 2) + label - 1) % _boundary_count(P)


def _point(g: int, V: int, r: float = 1.0) -> Point:
    # vertex 0 at the top, numbering clockwise
    t = math.pi / 2 - 2 * math.pi * g / V
    return (r * math.cos(t), r * math.sin(t))


def _region_dir(P: PolygonParams, k: int) -> Point:
    V = _boundary_count(P)
    a, b = _position(P, 1, k), (k - 1) * (P.n + 2) + P.N - 1
    return _point((a + b) / 2, V)


def layout(s: DiagonalSet) -> Layout:
    P = s.params
    V = _boundary_count(P)
    vertices = [_point(g, V) for g in range(V)]
    labels = []
    for g in range(V):
        label = g % (P.n + 2) + 1 if P.p > 1 else g + 1
        text = f"1={P.N}" if P.p > 1 and label == 1 else str(label)
        labels.append((_point(g, V, 1.12), text))
    arcs = []
    region_labels = []
    for k in range(1, P.p + 1):
        ux, uy = _region_dir(P, k)
        region_labels.append(((0.55 * ux, 0.55 * uy), f"Pi_{k}"))
        if P.p > 1:
            a = vertices[_position(P, 1, k)]
            b = vertices[_position(P, P.N, k)]
            # control on the region's own ray keeps every arc inside its sector
            pull = 0.2 if P.p > 2 else 0.04
            arcs.append((a, (pull * ux, pull * uy), b))
    chords = []
    for d in s:
        a = vertices[_position(P, d.i, d.region)]
        b = vertices[_position(P, d.j, d.region)]
        chords.append((a, b, str(d)))
    return Layout(vertices, labels, arcs, chords, region_labels)


def _f(x: float) -> str:
    out = f"{x:.3f}"
    return "0.000" if out == "-0.000" else out


def _svg(L: Layout, size: int = 400) -> str:
    half = size / 2
    scale = size * 0.4

    def xy(p: Point) -> tuple[str, str]:
        return _f(half + scale * p[0]), _f(half - scale * p[1])

    pts = " ".join(",".join(xy(v)) for v in L.vertices)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        '<g fill="none" stroke="black" stroke-width="1">',
        f'<polygon class="boundary" points="{pts}"/>',
    ]
    for a, c, b in L.arcs:
        out.append(f'<path class="region-arc" stroke="gray" d="M {",".join(xy(a))} Q {",".join(xy(c))} {",".join(xy(b))}"/>')
    for a, b, name in L.chords:
        (x1, y1), (x2, y2) = xy(a), xy(b)
        out.append(
            f'<line class="diagonal" stroke="#1f4e9c" stroke-width="2" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}">'
            f"<title>{name}</title></line>"
        )
    out.append("</g>")
    out.append('<g font-family="sans-serif" font-size="11" text-anchor="middle" dominant-baseline="middle">')
    for v in L.vertices:
        x, y = xy(v)
        out.append(f'<circle class="vertex" cx="{x}" cy="{y}" r="2"/>')
    for p, text in L.labels:
        x, y = xy(p)
        out.append(f'<text class="label" x="{x}" y="{y}">{text}</text>')
    for p, text in L.region_labels:
        x, y = xy(p)
        k = text.split("_")[1]
        out.append(f'<text class="region" x="{x}" y="{y}" font-size="16">&#928;<tspan font-size="10" dy="4">{k}</tspan></text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _tikz(L: Layout) -> str:
    def c(p: Point) -> str:
        return f"({_f(p[0])},{_f(p[1])})"

    out = ["\\begin{tikzpicture}[scale=3]"]
    out.append("\\draw " + " -- ".join(c(v) for v in L.vertices) + " -- cycle;")
    for a, ctrl, b in L.arcs:
        out.append(f"\\draw[gray] {c(a)} .. controls {c(ctrl)} .. {c(b)};")
    for a, b, name in L.chords:
        out.append(f"\\draw[thick] {c(a)} -- {c(b)}; % {name}")
    for p, text in L.labels:
        out.append(f"\\node at {c(p)} {{${text}$}};")
    for p, text in L.region_labels:
        k = text.split("_")[1]
        out.append(f"\\node at {c(p)} {{\\Large$\\Pi_{{{k}}}$}};")
    out.append("\\end{tikzpicture}")
    return "\n".join(out) + "\n"


def render_png(s: DiagonalSet, path: str, dpi: int = 150) -> None:
    """Rasterise the same layout with matplotlib into ``path``."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.patches import PathPatch, Polygon
    from matplotlib.path import Path

    L = layout(s)
    fig, ax = plt.subplots(figsize=(4, 4))
    ax.add_patch(Polygon(L.vertices, closed=True, fill=False, lw=1, ec="black"))
    for a, c, b in L.arcs:
        arc = Path([a, c, b], [Path.MOVETO, Path.CURVE3, Path.CURVE3])
        ax.add_patch(PathPatch(arc, fill=False, ec="gray", lw=1))
    for a, b, _ in L.chords:
        ax.plot([a[0], b[0]], [a[1], b[1]], color="#1f4e9c", lw=2)
    for p, text in L.labels:
        ax.text(p[0], p[1], text, ha="center", va="center", fontsize=8)
    for p, text in L.region_labels:
        ax.text(p[0], p[1], "$\\Pi_{%s}$" % text.split("_")[1], ha="center", va="center", fontsize=14)
    ax.set_xlim(-1.25, 1.25)
    ax.set_ylim(-1.25, 1.25)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.savefig(path, dpi=dpi, bbox_inches="tight", metadata={"Software": None})
    plt.close(fig)


def draw(s: DiagonalSet, fmt: str = "svg") -> str:
    """Render ``s`` on the repetitive polygon as ``svg`` or ``tikz`` source."""
    if fmt == "svg":
        return _svg(layout(s))
    if fmt == "tikz":
        return _tikz(layout(s))
    raise UnknownFormat(f"unknown drawing format {fmt!r}; expected svg or tikz")
