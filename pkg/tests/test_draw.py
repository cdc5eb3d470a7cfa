import re

import pytest

from repclus import DiagonalSet, PolygonParams
from repclus.draw import draw, layout, render_png
from repclus.quiver import UnknownFormat

P34 = PolygonParams(3, 4)
X = DiagonalSet.from_triples(P34, [(1, 3, 1), (2, 4, 3)])
Y = DiagonalSet.from_triples(P34, [(i, j, k) for k in range(1, 5) for (i, j) in ((1, 3), (1, 4), (1, 5))])


def test_empty_polygon_33():
    s = DiagonalSet.empty(PolygonParams(3, 3))
    L = layout(s)
    assert len(L.vertices) == 15 and len(L.arcs) == 3 and not L.chords
    svg = draw(s, "svg")
    pts = re.search(r'class="boundary" points="([^"]*)"', svg).group(1)
    assert len(pts.split()) == 15
    assert svg.count('class="region-arc"') == 3
    assert "1=6" in svg


def test_p1_is_plain_polygon():
    L = layout(DiagonalSet.full(PolygonParams(2, 1)))
    assert len(L.vertices) == 5 and not L.arcs and len(L.chords) == 5


def test_fan_panels():
    for s in (X, Y):
        L = layout(s)
        assert len(L.vertices) == 20 and len(L.arcs) == 4
        assert len(L.chords) == len(s)
        svg = draw(s, "svg")
        assert svg.count('class="diagonal"') == len(s)
        assert all(f"<title>{d}</title>" in svg for d in s)


def test_chords_stay_in_their_region():
    # both endpoints of a region-k chord sit on region k's stretch of the boundary
    P = PolygonParams(3, 3)
    L = layout(DiagonalSet.full(P))
    span = P.n + 2
    index = {v: g for g, v in enumerate(L.vertices)}
    for (a, b, name) in L.chords:
        k = int(name.split(",")[2])
        lo = (k - 1) * span
        for g in (index[a], index[b]):
            assert (g - lo) % (P.p * span) <= span


def test_deterministic_and_tikz():
    assert draw(Y, "svg") == draw(Y, "svg")
    tikz = draw(Y, "tikz")
    assert tikz.startswith("\\begin{tikzpicture}") and tikz.count("% ") == 12
    assert draw(Y, "tikz") == tikz
    with pytest.raises(UnknownFormat):
        draw(Y, "pdf")


def test_png(tmp_path):
    out = tmp_path / "y.png"
    render_png(Y, str(out))
    assert out.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"
