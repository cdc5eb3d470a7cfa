"""The translation quiver of diagonals (AR-quiver of C_{n,p})."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field

from repclus.polygon import Diagonal, PolygonParams, apply_functor, enumerate_diagonals, format_diagonal

__all__ = [
    "ArQuiver",
    "MeshReport",
    "UnknownFormat",
    "build_ar_quiver",
    "validate_stable_translation",
    "export_quiver",
    "import_quiver",
]


class UnknownFormat(ValueError):
    pass


@dataclass(frozen=True)
class ArQuiver:
    params: PolygonParams
    vertices: tuple[Diagonal, ...]
    arrows: tuple[tuple[Diagonal, Diagonal], ...]
    translation: dict[Diagonal, Diagonal] = field(hash=False)

    def successors(self, d: Diagonal) -> list[Diagonal]:
        return [y for x, y in self.arrows if x == d]


def build_ar_quiver(params: PolygonParams) -> ArQuiver:
    N = params.N
    vertices = tuple(enumerate_diagonals(params))
    arrows = []
    for d in vertices:
        i, j, k = d.i, d.j, d.region
        if j != N:
            targets = [Diagonal(i, j + 1, k), Diagonal(i + 1, j, k)]
        else:
            targets = [Diagonal(i + 1, N, k), Diagonal(1, i, params.region(k + 1))]
        # targets that are edges or the (1, N) segment are not vertices
        arrows.extend((d, t) for t in targets if params.is_valid(t))
    translation = {d: apply_functor("tau", d, params) for d in vertices}
    return ArQuiver(params, vertices, tuple(arrows), translation)


@dataclass
class MeshReport:
    ok: bool
    bijective: bool
    duplicate_arrows: list[tuple[Diagonal, Diagonal]]
    unmatched: list[tuple[Diagonal, Diagonal]]
    missing: list[tuple[Diagonal, Diagonal]] = field(default_factory=list)  # expected mirrors that are absent

    def to_json(self) -> dict:
        pair = lambda a: [format_diagonal(a[0]), format_diagonal(a[1])]
        return {
            "ok": self.ok,
            "bijective": self.bijective,
            "duplicate_arrows": [pair(a) for a in self.duplicate_arrows],
            "unmatched": [pair(a) for a in self.unmatched],
            "missing": [pair(a) for a in self.missing],
        }


def validate_stable_translation(q: ArQuiver) -> MeshReport:
    """Check tau is a bijection and #(x -> y) == #(tau y -> x) for every arrow x -> y."""
    verts = set(q.vertices)
    image = [q.translation.get(v) for v in q.vertices]
    bijective = all(t in verts for t in image) and len(set(image)) == len(verts)
    counts = Counter(q.arrows)
    dup = sorted((a for a, c in counts.items() if c > 1), key=lambda a: (a[0].key, a[1].key))
    unmatched, missing = [], set()
    for (x, y), c in counts.items():
        ty = q.translation.get(y)
        if ty is None or counts.get((ty, x), 0) != c:
            unmatched.append((x, y))
            if ty is not None:
                missing.add((ty, x))
    order = lambda a: (a[0].key, a[1].key)
    unmatched.sort(key=order)
    return MeshReport(bijective and not unmatched, bijective, dup, unmatched, sorted(missing, key=order))


def export_quiver(q: ArQuiver, fmt: str) -> str:
    if fmt == "json":
        doc = {
            "n": q.params.n,
            "p": q.params.p,
            "vertices": [v.as_list() for v in q.vertices],
            "arrows": [[x.as_list(), y.as_list()] for x, y in q.arrows],
            "translation": [[v.as_list(), q.translation[v].as_list()] for v in q.vertices],
        }
        return json.dumps(doc, indent=None, separators=(",", ":")) + "\n"
    if fmt == "dot":
        lines = [f'digraph "Gamma_{q.params.n}_{q.params.p}" {{', "  rankdir=LR;"]
        for v in q.vertices:
            lines.append(f'  "{v}";')
        for x, y in q.arrows:
            lines.append(f'  "{x}" -> "{y}";')
        for v in q.vertices:
            lines.append(f'  "{v}" -> "{q.translation[v]}" [style=dashed, constraint=false];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise UnknownFormat(f"unknown quiver format {fmt!r}; expected dot or json")


def import_quiver(text: str) -> ArQuiver:
    doc = json.loads(text)
    params = PolygonParams(doc["n"], doc["p"])
    vertices = tuple(Diagonal(*v) for v in doc["vertices"])
    arrows = tuple((Diagonal(*x), Diagonal(*y)) for x, y in doc["arrows"])
    translation = {Diagonal(*a): Diagonal(*b) for a, b in doc["translation"]}
    return ArQuiver(params, vertices, arrows, translation)
