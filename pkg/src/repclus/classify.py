"""Rigid, maximal rigid and cluster-tilting sets; torsion pairs from Ptolemy diagrams."""

from __future__ import annotations

from dataclasses import dataclass

from repclus.diagrams import (
    DiagonalSet,
    PtolemyViolation,
    ext_left_perp,
    ext_right_perp,
    hom_right_perp,
    is_ptolemy,
    ptolemy_violations,
)
from repclus.polygon import tables

__all__ = [
    "NotPtolemyError",
    "TorsionPair",
    "ClassificationReport",
    "is_rigid",
    "is_maximal_rigid",
    "is_cluster_tilting",
    "is_cluster_tilting_structural",
    "torsion_pair_of",
    "classify",
]


class NotPtolemyError(ValueError):
    def __init__(self, s: DiagonalSet, violations: list[PtolemyViolation]):
        self.set = s
        self.violations = violations
        super().__init__(f"{s} is not a Ptolemy diagram ({len(violations)} violated clauses)")


@dataclass(frozen=True)
class TorsionPair:
    torsion: DiagonalSet
    free: DiagonalSet

    def to_json(self) -> dict:
        return {"torsion": self.torsion.to_json(), "free": self.free.to_json()}


@dataclass(frozen=True)
class ClassificationReport:
    rigid: bool
    maximal_rigid: bool
    cluster_tilting: bool
    ptolemy: bool
    size: int

    def to_json(self) -> dict:
        return {
            "rigid": self.rigid,
            "maximal_rigid": self.maximal_rigid,
            "cluster_tilting": self.cluster_tilting,
            "ptolemy": self.ptolemy,
            "size": self.size,
        }


def _ext_touch(s: DiagonalSet) -> int:
    """Mask of diagonals with nonzero Ext to or from some member of ``s``."""
    T = tables(s.params)
    hit, rest = 0, s.mask
    while rest:
        low = rest & -rest
        hit |= T.cross[low.bit_length() - 1]
        rest ^= low
    return hit


def is_rigid(s: DiagonalSet) -> bool:
    return _ext_touch(s) & s.mask == 0


def is_maximal_rigid(s: DiagonalSet) -> bool:
    # rigidity is inherited by subsets, so one-step extensions decide maximality
    if not is_rigid(s):
        return False
    free = tables(s.params).full & ~s.mask & ~_ext_touch(s)
    return free == 0


def is_cluster_tilting_structural(s: DiagonalSet) -> bool:
    """Region 1 is a triangulation and region k is rho^(k-1) of region 1."""
    P = s.params
    first = s.region_slice(1)
    members = list(first)
    if len(members) != P.n:
        return False
    for a, x in enumerate(members):
        for y in members[a + 1 :]:
            if x.i < y.i < x.j < y.j or y.i < x.i < y.j < x.j:
                return False
    # n pairwise noncrossing diagonals of an (n+3)-gon form a triangulation
    current = first
    for k in range(2, P.p + 1):
        current = current.image("rho")
        if s.region_slice(k) != current:
            return False
    return True


def is_cluster_tilting(s: DiagonalSet) -> bool:
    by_perp = ext_right_perp(s) == s and ext_left_perp(s) == s
    structural = is_cluster_tilting_structural(s)
    if by_perp != structural:
        raise AssertionError(f"cluster-tilting tests disagree on {s}: perp={by_perp}, structural={structural}")
    return by_perp


def torsion_pair_of(s: DiagonalSet) -> TorsionPair:
    if not is_ptolemy(s):
        raise NotPtolemyError(s, ptolemy_violations(s))
    return TorsionPair(s, hom_right_perp(s))


def classify(s: DiagonalSet) -> ClassificationReport:
    return ClassificationReport(
        rigid=is_rigid(s),
        maximal_rigid=is_maximal_rigid(s),
        cluster_tilting=is_cluster_tilting(s),
        ptolemy=is_ptolemy(s),
        size=len(s),
    )
