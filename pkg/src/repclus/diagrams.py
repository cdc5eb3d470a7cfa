"""Sets of diagonals: perps, the Ptolemy conditions and Ptolemy closure."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from repclus.polygon import (
    Diagonal,
    PolygonParams,
    crosses,
    format_diagonal,
    parse_diagonal,
    tables,
)

__all__ = [
    "DiagonalSet",
    "PtolemyViolation",
    "required_connectors",
    "clause_connectors",
    "is_ptolemy",
    "ptolemy_violations",
    "ptolemy_closure",
    "ext_right_perp",
    "ext_left_perp",
    "hom_right_perp",
    "hom_left_perp",
    "parse_set",
]


@dataclass(frozen=True)
class DiagonalSet:
    """Immutable set of diagonals stored as an int bit-vector.

    Bit ``t`` is the ``t``-th diagonal of ``enumerate_diagonals(params)``.
    """

    params: PolygonParams
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.params.total:
            raise ValueError("mask has bits outside the diagonal range")

    @classmethod
    def of(cls, params: PolygonParams, diagonals: Iterable[Diagonal] = ()) -> "DiagonalSet":
        return cls(params, tables(params).mask_of(diagonals))

    @classmethod
    def from_triples(cls, params: PolygonParams, triples: Iterable[Iterable[int]]) -> "DiagonalSet":
        return cls.of(params, (Diagonal(*t) for t in triples))

    @classmethod
    def empty(cls, params: PolygonParams) -> "DiagonalSet":
        return cls(params, 0)

    @classmethod
    def full(cls, params: PolygonParams) -> "DiagonalSet":
        return cls(params, tables(params).full)

    def __iter__(self) -> Iterator[Diagonal]:
        return iter(tables(self.params).members(self.mask))

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, d: object) -> bool:
        t = tables(self.params).index.get(d)  # type: ignore[arg-type]
        return t is not None and bool(self.mask >> t & 1)

    def _same(self, other: "DiagonalSet") -> None:
        if other.params != self.params:
            raise ValueError("diagonal sets over different parameters")

    def __or__(self, other: "DiagonalSet") -> "DiagonalSet":
        self._same(other)
        return DiagonalSet(self.params, self.mask | other.mask)

    def __and__(self, other: "DiagonalSet") -> "DiagonalSet":
        self._same(other)
        return DiagonalSet(self.params, self.mask & other.mask)

    def __sub__(self, other: "DiagonalSet") -> "DiagonalSet":
        self._same(other)
        return DiagonalSet(self.params, self.mask & ~other.mask)

    def __le__(self, other: "DiagonalSet") -> bool:
        self._same(other)
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "DiagonalSet") -> bool:
        return self <= other and self.mask != other.mask

    def complement(self) -> "DiagonalSet":
        return DiagonalSet(self.params, tables(self.params).full & ~self.mask)

    def region_slice(self, k: int) -> "DiagonalSet":
        """Members lying in region ``k``."""
        T = tables(self.params)
        width = self.params.per_region
        block = ((1 << width) - 1) << ((k - 1) * width)
        return DiagonalSet(self.params, self.mask & block & T.full)

    def image(self, functor: str, inverse: bool = False) -> "DiagonalSet":
        """Elementwise image under ``rho``, ``tau`` or ``shift``."""
        return DiagonalSet(self.params, tables(self.params).map_mask(self.mask, functor, inverse))

    def to_json(self) -> list[list[int]]:
        return [d.as_list() for d in self]

    def to_text(self) -> str:
        return ";".join(format_diagonal(d) for d in self)

    def __str__(self) -> str:
        return "{" + self.to_text().replace(";", " ; ") + "}"


def parse_set(text: str, params: PolygonParams) -> DiagonalSet:
    """Parse ``"i,j,k;i,j,k;..."``; duplicates and invalid triples raise ValueError."""
    text = text.strip()
    if not text:
        return DiagonalSet.empty(params)
    if text.startswith("["):
        items = [Diagonal(*t) for t in json.loads(text)]
    else:
        items = [parse_diagonal(part) for part in text.split(";") if part.strip()]
    seen: set[Diagonal] = set()
    for d in items:
        params.check(d)
        if d in seen:
            raise ValueError(f"duplicate diagonal {format_diagonal(d)}")
        seen.add(d)
    return DiagonalSet.of(params, items)


# -- Ptolemy conditions -----------------------------------------------------------


def clause_connectors(x: Diagonal, y: Diagonal, params: PolygonParams) -> dict[str, list[Diagonal]]:
    """Connectors demanded by each firing clause, before validity filtering.

    Every clause whose region condition holds modulo p fires; there is no
    first-match short circuit.  Pt2 on (y, x) is Pt3 on (x, y), so one
    orientation suffices.
    """
    p = params.p
    i, j, l = x.i, x.j, x.region
    i2, j2, l2 = y.i, y.j, y.region
    out: dict[str, list[Diagonal]] = {}
    if (l - l2) % p == 0 and (i < i2 < j < j2 or i2 < i < j2 < j):
        out["Pt1"] = [Diagonal(i2, j, l), Diagonal(i, j2, l)]
    if (l2 - l - 1) % p == 0 and i2 < i < j2 < j:
        out["Pt2"] = [Diagonal(i2, i, l2), Diagonal(j2, j, l)]
    if (l - l2 - 1) % p == 0 and i < i2 < j < j2:
        out["Pt3"] = [Diagonal(i, i2, l), Diagonal(j, j2, l2)]
    return out


def required_connectors(x: Diagonal, y: Diagonal, params: PolygonParams) -> frozenset[Diagonal]:
    """Diagonals a Ptolemy diagram must contain once it contains crossing ``x``, ``y``."""
    if not crosses(x, y, params):
        raise ValueError(f"{format_diagonal(x)} and {format_diagonal(y)} do not cross")
    found = set()
    for ds in clause_connectors(x, y, params).values():
        found.update(d for d in ds if params.is_valid(d))
    return frozenset(found)


class _ConnectorTable:
    """Connector masks for every crossing pair, indexed by diagonal."""

    def __init__(self, params: PolygonParams):
        T = tables(params)
        self.pairs: list[tuple[int, int, int]] = []
        self.by_diag: list[list[tuple[int, int]]] = [[] for _ in range(T.size)]
        for a in range(T.size):
            rest = T.cross[a] >> (a + 1)
            b = a + 1
            while rest:
                if rest & 1:
                    x, y = T.diagonals[a], T.diagonals[b]
                    m = T.mask_of(required_connectors(x, y, params))
                    self.pairs.append((a, b, m))
                    self.by_diag[a].append((b, m))
                    self.by_diag[b].append((a, m))
                rest >>= 1
                b += 1


@lru_cache(maxsize=None)
def connector_table(params: PolygonParams) -> _ConnectorTable:
    return _ConnectorTable(params)


@dataclass(frozen=True)
class PtolemyViolation:
    pair: tuple[Diagonal, Diagonal]
    missing: tuple[Diagonal, ...]
    clause: str

    def to_json(self) -> dict:
        return {
            "pair": [d.as_list() for d in self.pair],
            "missing": [d.as_list() for d in self.missing],
            "clause": self.clause,
        }


def _ptolemy_mask(mask: int, params: PolygonParams) -> bool:
    T = tables(params)
    C = connector_table(params)
    rest = mask
    while rest:
        low = rest & -rest
        a = low.bit_length() - 1
        rest ^= low
        if T.cross[a] & rest:
            for b, m in C.by_diag[a]:
                if b > a and mask >> b & 1 and m & ~mask:
                    return False
    return True


def is_ptolemy(s: DiagonalSet) -> bool:
    return _ptolemy_mask(s.mask, s.params)


def ptolemy_violations(s: DiagonalSet) -> list[PtolemyViolation]:
    """Every crossing pair of ``s`` with a clause whose connectors are not all in ``s``."""
    P = s.params
    members = list(s)
    out = []
    for a, x in enumerate(members):
        for y in members[a + 1 :]:
            if not crosses(x, y, P):
                continue
            for clause, ds in clause_connectors(x, y, P).items():
                missing = tuple(sorted({d for d in ds if P.is_valid(d) and d not in s}))
                if missing:
                    out.append(PtolemyViolation((x, y), missing, clause))
    return out


def _closure_mask(mask: int, params: PolygonParams) -> int:
    C = connector_table(params)
    todo = mask
    while todo:
        low = todo & -todo
        a = low.bit_length() - 1
        todo ^= low
        for b, m in C.by_diag[a]:
            if mask >> b & 1:
                new = m & ~mask
                if new:
                    mask |= new
                    todo |= new
    return mask


def ptolemy_closure(s: DiagonalSet) -> DiagonalSet:
    """Smallest Ptolemy diagram containing ``s``."""
    return DiagonalSet(s.params, _closure_mask(s.mask, s.params))


# -- perpendicular sets -------------------------------------------------------------


def _perp(mask: int, rows: list[int], full: int) -> int:
    hit = 0
    while mask:
        low = mask & -mask
        hit |= rows[low.bit_length() - 1]
        mask ^= low
    return full & ~hit


def ext_right_perp(s: DiagonalSet) -> DiagonalSet:
    """Diagonals u with Ext^1(v, u) = 0 for every v in ``s``."""
    T = tables(s.params)
    return DiagonalSet(s.params, _perp(s.mask, T.ext_out, T.full))


def ext_left_perp(s: DiagonalSet) -> DiagonalSet:
    """Diagonals u with Ext^1(u, v) = 0 for every v in ``s``."""
    T = tables(s.params)
    return DiagonalSet(s.params, _perp(s.mask, T.ext_in, T.full))


def hom_right_perp(s: DiagonalSet) -> DiagonalSet:
    """Diagonals u with Hom(v, u) = 0 for every v in ``s``; the torsion-free part."""
    T = tables(s.params)
    return DiagonalSet(s.params, _perp(s.mask, T.hom_out, T.full))


def hom_left_perp(s: DiagonalSet) -> DiagonalSet:
    T = tables(s.params)
    return DiagonalSet(s.params, _perp(s.mask, T.hom_in, T.full))
