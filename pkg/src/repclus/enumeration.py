"""Enumeration of Ptolemy diagrams, cluster-tilting and maximal rigid sets."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Union

import numpy as np

from repclus.classify import TorsionPair
from repclus.diagrams import DiagonalSet, _closure_mask, _ptolemy_mask, hom_right_perp
from repclus.polygon import Diagonal, PolygonParams, tables

__all__ = [
    "CapExceeded",
    "EnumerationRequest",
    "DEFAULT_CAP_BITS",
    "ptolemy_masks",
    "count_ptolemy",
    "enumerate_ptolemy",
    "triangulations",
    "enumerate_cluster_tilting",
    "maximal_cliques",
    "enumerate_maximal_rigid",
    "orbit_reduce",
    "run",
]

log = logging.getLogger(__name__)

DEFAULT_CAP_BITS = 28
TARGETS = ("ptolemy", "torsion_pairs", "cluster_tilting", "maximal_rigid")
MODES = ("powerset", "closure_system", "structural")


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class EnumerationRequest:
    params: PolygonParams
    target: str = "ptolemy"
    mode: Optional[str] = None  # None picks powerset below the cap, else closure_system
    count_only: bool = False
    orbit_reduction: Optional[str] = None
    cap_bits: int = DEFAULT_CAP_BITS

    def __post_init__(self):
        if self.target not in TARGETS:
            raise ValueError(f"unknown target {self.target!r}; expected one of {TARGETS}")
        if self.mode is not None and self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        if self.orbit_reduction not in (None, "rho", "shift"):
            raise ValueError(f"orbit reduction must be rho or shift, got {self.orbit_reduction!r}")

    @property
    def resolved_mode(self) -> str:
        if self.mode is not None:
            return self.mode
        if self.target in ("cluster_tilting", "maximal_rigid"):
            return "structural"
        return "powerset" if self.params.total <= self.cap_bits else "closure_system"


# -- Ptolemy diagrams -----------------------------------------------------------------


def _powerset_py(params: PolygonParams) -> list[int]:
    return [s for s in range(1 << params.total) if _ptolemy_mask(s, params)]


def _next_closure_py(params: PolygonParams) -> list[int]:
    m = params.total
    A = _closure_mask(0, params)
    out = [A]
    while True:
        for b in range(m):
            bit = 1 << b
            if A & bit:
                continue
            high = ~((bit << 1) - 1)
            B = _closure_mask((A & high) | bit, params)
            if (B & ~A) & high == 0:
                A = B
                out.append(A)
                break
        else:
            return out


def ptolemy_masks(
    params: PolygonParams, mode: str = "powerset", cap_bits: int = DEFAULT_CAP_BITS, count_only: bool = False
) -> Union[list[int], int]:
    """Bit-vectors of all Ptolemy diagrams in ascending order (or their number)."""
    m = params.total
    if mode == "powerset" and m > cap_bits:
        raise CapExceeded(f"powerset mode needs 2^{m} subsets; cap is 2^{cap_bits}")
    if mode not in ("powerset", "closure_system"):
        raise ValueError(f"mode {mode!r} does not enumerate Ptolemy diagrams")
    if m > 63:
        if mode == "powerset":
            raise CapExceeded(f"{m} diagonals exceed the 63-bit kernel width")
        res = _next_closure_py(params)
        return len(res) if count_only else res

    from repclus import _kernels as K

    K.configure_threads()
    fp, fb, fm, ap, ab, am = K.pair_arrays(params)
    if mode == "powerset":
        lo_bits = min(m, 20)
        counts = K.powerset_counts(m, lo_bits, fp, fb, fm)
        total = int(counts.sum())
        if count_only:
            return total
        offsets = np.zeros(len(counts) + 1, np.int64)
        np.cumsum(counts, out=offsets[1:])
        out = np.zeros(total, np.uint64)
        K.powerset_fill(m, lo_bits, fp, fb, fm, offsets, out)
        return [int(x) for x in out]
    dummy = np.zeros(1, np.uint64)
    total = K.next_closure_run(m, ap, ab, am, dummy, False)
    if count_only:
        return int(total)
    out = np.zeros(total, np.uint64)
    K.next_closure_run(m, ap, ab, am, out, True)
    return [int(x) for x in out]


def count_ptolemy(params: PolygonParams, mode: str = "powerset", cap_bits: int = DEFAULT_CAP_BITS) -> int:
    return ptolemy_masks(params, mode, cap_bits, count_only=True)  # type: ignore[return-value]


def enumerate_ptolemy(req: EnumerationRequest) -> Union[list[DiagonalSet], list[TorsionPair], int]:
    """All Ptolemy diagrams (target ``ptolemy``) or their torsion pairs, in canonical order."""
    if req.target not in ("ptolemy", "torsion_pairs"):
        raise ValueError(f"enumerate_ptolemy cannot produce target {req.target!r}")
    res = ptolemy_masks(req.params, req.resolved_mode, req.cap_bits, req.count_only)
    if req.count_only:
        return res  # type: ignore[return-value]
    sets = [DiagonalSet(req.params, s) for s in res]  # type: ignore[union-attr]
    if req.target == "torsion_pairs":
        return [TorsionPair(s, hom_right_perp(s)) for s in sets]
    return sets


# -- cluster tilting -----------------------------------------------------------------


def triangulations(N: int) -> list[frozenset[tuple[int, int]]]:
    """All triangulations of the convex N-gon on vertices 1..N, as sets of chords."""

    def tri(lo: int, hi: int) -> list[frozenset[tuple[int, int]]]:
        if hi - lo < 2:
            return [frozenset()]
        out = []
        for apex in range(lo + 1, hi):
            own = {c for c in ((lo, apex), (apex, hi)) if c[1] - c[0] >= 2}
            for left in tri(lo, apex):
                for right in tri(apex, hi):
                    out.append(frozenset(own) | left | right)
        return out

    return tri(1, N)


def enumerate_cluster_tilting(params: PolygonParams) -> list[DiagonalSet]:
    """Each triangulation of the (n+3)-gon replicated into all p regions by rho."""
    out = []
    for t in triangulations(params.N):
        ds = [Diagonal(i, j, k) for (i, j) in t for k in range(1, params.p + 1)]
        out.append(DiagonalSet.of(params, ds))
    out.sort(key=lambda s: s.mask)
    return out


# -- maximal rigid ---------------------------------------------------------------------


def maximal_cliques(adj: list[int], start: int = 0) -> list[int]:
    """Maximal cliques (as bitmasks) containing the clique ``start``.

    Bron-Kerbosch with Tomita pivoting over int bit-vectors; ``adj[v]``
    must not contain ``v`` itself.
    """
    cand = (1 << len(adj)) - 1
    rest = start
    while rest:
        low = rest & -rest
        cand &= adj[low.bit_length() - 1]
        rest ^= low
    found: list[int] = []

    def expand(R: int, P: int, X: int) -> None:
        if not P and not X:
            found.append(R)
            return
        PX = P | X
        best, pivot = -1, 0
        while PX:
            low = PX & -PX
            u = low.bit_length() - 1
            c = bin(P & adj[u]).count("1")
            if c > best:
                best, pivot = c, u
            PX ^= low
        todo = P & ~adj[pivot]
        while todo:
            low = todo & -todo
            v = low.bit_length() - 1
            todo ^= low
            expand(R | low, P & adj[v], X & adj[v])
            P &= ~low
            X |= low

    expand(start, cand, 0)
    return sorted(found)


def compatibility_graph(params: PolygonParams) -> list[int]:
    """Adjacency masks: u ~ v iff Ext^1 vanishes in both directions."""
    T = tables(params)
    return [T.full & ~T.cross[a] & ~(1 << a) for a in range(T.size)]


def enumerate_maximal_rigid(params: PolygonParams, containing: Optional[DiagonalSet] = None) -> list[DiagonalSet]:
    """Maximal rigid sets (maximal cliques of the compatibility graph)."""
    start = 0 if containing is None else containing.mask
    adj = compatibility_graph(params)
    if any((adj[a] | 1 << a) & start != start for a in _bits(start)):
        raise ValueError("the required subset is not rigid")
    return [DiagonalSet(params, m) for m in maximal_cliques(adj, start)]


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- orbits ------------------------------------------------------------------------


def orbit_reduce(sets: list[DiagonalSet], generator: str) -> list[tuple[DiagonalSet, int]]:
    """Orbit representatives (smallest mask) with orbit sizes counted within ``sets``."""
    if generator not in ("rho", "shift"):
        raise ValueError(f"generator must be rho or shift, got {generator!r}")
    if not sets:
        return []
    params = sets[0].params
    T = tables(params)
    groups: dict[int, list[int]] = {}
    for s in sets:
        orbit = [s.mask]
        nxt = T.map_mask(s.mask, generator)
        while nxt != s.mask:
            orbit.append(nxt)
            nxt = T.map_mask(nxt, generator)
        groups.setdefault(min(orbit), []).append(s.mask)
    return [(DiagonalSet(params, min(ms)), len(ms)) for _, ms in sorted(groups.items())]


def run(req: EnumerationRequest):
    """Dispatch a request; returns an int for ``count_only`` else a list.

    With ``orbit_reduction`` the list holds ``(representative, orbit size)``.
    """
    mode = req.resolved_mode
    if req.target in ("ptolemy", "torsion_pairs"):
        if req.orbit_reduction and req.target == "ptolemy" and not req.count_only:
            return orbit_reduce(enumerate_ptolemy(req), req.orbit_reduction)  # type: ignore[arg-type]
        if req.orbit_reduction and req.count_only:
            sets = enumerate_ptolemy(EnumerationRequest(req.params, "ptolemy", req.mode, cap_bits=req.cap_bits))
            return len(orbit_reduce(sets, req.orbit_reduction))  # type: ignore[arg-type]
        if req.orbit_reduction:
            raise ValueError("orbit reduction applies to sets, not torsion pairs")
        return enumerate_ptolemy(req)
    if mode != "structural":
        raise ValueError(f"target {req.target!r} supports only structural mode")
    if req.target == "cluster_tilting":
        sets = enumerate_cluster_tilting(req.params)
    else:
        sets = enumerate_maximal_rigid(req.params)
    if req.orbit_reduction:
        reduced = orbit_reduce(sets, req.orbit_reduction)
        return len(reduced) if req.count_only else reduced
    return len(sets) if req.count_only else sets
