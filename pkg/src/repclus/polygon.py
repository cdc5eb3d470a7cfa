"""Repetitive polygon, its diagonals, functor actions and Ext/Hom predicates.

Vertices of a region carry labels 1..N with N = n + 3.  A diagonal is a
triple ``(i, j, region)`` with ``1 <= i < j <= N``, ``j - i >= 2`` and
``(i, j) != (1, N)``.  Region arithmetic is always modulo ``p`` with
representatives ``1..p``; vertex arithmetic is never wrapped.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Union

__all__ = [
    "PolygonParams",
    "Diagonal",
    "Functor",
    "enumerate_diagonals",
    "apply_functor",
    "ext_nonzero",
    "hom_nonzero",
    "crosses",
    "parse_diagonal",
    "format_diagonal",
    "Tables",
    "tables",
]


@dataclass(frozen=True, order=True)
class PolygonParams:
    n: int
    p: int

    def __post_init__(self):
        for name in ("n", "p"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ValueError(f"{name} must be an integer >= 1, got {v!r}")

    @property
    def N(self) -> int:
        return self.n + 3

    @property
    def per_region(self) -> int:
        return self.n * (self.n + 3) // 2

    @property
    def total(self) -> int:
        return self.p * self.per_region

    def region(self, k: int) -> int:
        """Canonical representative of region index ``k`` in ``1..p``."""
        return (k - 1) % self.p + 1

    def is_valid(self, d: "Diagonal") -> bool:
        N = self.N
        return (
            1 <= d.i < d.j <= N
            and d.j - d.i >= 2
            and (d.i, d.j) != (1, N)
            and 1 <= d.region <= self.p
        )

    def check(self, d: "Diagonal") -> "Diagonal":
        if not self.is_valid(d):
            raise ValueError(f"{format_diagonal(d)} is not a diagonal for n={self.n}, p={self.p}")
        return d


@dataclass(frozen=True)
class Diagonal:
    i: int
    j: int
    region: int

    @property
    def key(self) -> tuple[int, int, int]:
        """Canonical sort key (region, i, j)."""
        return (self.region, self.i, self.j)

    def __lt__(self, other: "Diagonal") -> bool:
        return self.key < other.key

    def as_list(self) -> list[int]:
        return [self.i, self.j, self.region]

    def __str__(self) -> str:
        return format_diagonal(self)


def format_diagonal(d: Diagonal) -> str:
    return f"{d.i},{d.j},{d.region}"


_TRIPLE = re.compile(r"^\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*$")


def parse_diagonal(text: str, params: PolygonParams | None = None) -> Diagonal:
    m = _TRIPLE.match(text)
    if not m:
        raise ValueError(f"cannot parse diagonal {text!r}; expected 'i,j,k'")
    d = Diagonal(*(int(g) for g in m.groups()))
    if params is not None:
        params.check(d)
    return d


def enumerate_diagonals(params: PolygonParams) -> list[Diagonal]:
    """All diagonals in canonical (region, i, j) order."""
    N = params.N
    out = []
    for k in range(1, params.p + 1):
        for i in range(1, N + 1):
            for j in range(i + 2, N + 1):
                if (i, j) != (1, N):
                    out.append(Diagonal(i, j, k))
    return out


# -- functors ---------------------------------------------------------------

_BASE = ("rho", "tau", "shift")


@dataclass(frozen=True)
class Functor:
    """``name`` raised to ``power``; ``inverse`` flips the direction.

    >>> Functor("tau", inverse=True).steps
    -1
    """

    name: str
    inverse: bool = False
    power: int = 1

    def __post_init__(self):
        if self.name not in _BASE:
            raise ValueError(f"unknown functor {self.name!r}; expected one of {_BASE}")

    @property
    def steps(self) -> int:
        return -self.power if self.inverse else self.power

    @classmethod
    def parse(cls, text: str) -> "Functor":
        """Parse ``tau``, ``tau^-1``, ``shift^3``, ``rho^-2``."""
        m = re.fullmatch(r"\s*([a-z]+)\s*(?:\^\s*(-?\d+))?\s*", text)
        if not m:
            raise ValueError(f"cannot parse functor {text!r}")
        e = int(m.group(2)) if m.group(2) is not None else 1
        return cls(m.group(1), inverse=e < 0, power=abs(e))


def _rho(d: Diagonal, P: PolygonParams, forward: bool) -> Diagonal:
    return Diagonal(d.i, d.j, P.region(d.region + (1 if forward else -1)))


def _tau(d: Diagonal, P: PolygonParams, forward: bool) -> Diagonal:
    i, j, k, N = d.i, d.j, d.region, P.N
    if forward:
        if i != 1:
            return Diagonal(i - 1, j - 1, k)
        return Diagonal(j - 1, N, P.region(k - 1))
    if j != N:
        return Diagonal(i + 1, j + 1, k)
    return Diagonal(1, i + 1, P.region(k + 1))


def _shift(d: Diagonal, P: PolygonParams, forward: bool) -> Diagonal:
    i, j, k, N = d.i, d.j, d.region, P.N
    if forward:
        if i == 1:
            return Diagonal(j - 1, N, k)
        return Diagonal(i - 1, j - 1, P.region(k + 1))
    if j == N:
        return Diagonal(1, i + 1, k)
    return Diagonal(i + 1, j + 1, P.region(k - 1))


_RULES = {"rho": _rho, "tau": _tau, "shift": _shift}

FunctorLike = Union[Functor, str, Sequence[Union[Functor, str]]]


def _as_chain(f: FunctorLike) -> list[Functor]:
    if isinstance(f, Functor):
        return [f]
    if isinstance(f, str):
        return [Functor.parse(f)]
    return [g if isinstance(g, Functor) else Functor.parse(g) for g in f]


def apply_functor(f: FunctorLike, d: Diagonal, params: PolygonParams) -> Diagonal:
    """Apply ``f`` to ``d``.

    A sequence is read as a composite, rightmost factor first, so
    ``["shift", "tau^-1"]`` is F = tau^-1 followed by [1].
    """
    for g in reversed(_as_chain(f)):
        rule = _RULES[g.name]
        steps = g.steps
        forward = steps > 0
        for _ in range(abs(steps)):
            d = rule(d, params, forward)
    return d


# -- predicates ---------------------------------------------------------------


def ext_nonzero(x: Diagonal, y: Diagonal, params: PolygonParams) -> bool:
    """Ext^1(x, y) != 0."""
    p = params.p
    same = (x.region - y.region) % p == 0
    after = (x.region - y.region - 1) % p == 0
    return (same and y.i < x.i < y.j < x.j) or (after and x.i < y.i < x.j < y.j)


def hom_nonzero(x: Diagonal, y: Diagonal, params: PolygonParams) -> bool:
    """Hom(x, y) != 0, computed as Ext^1(x, y[-1])."""
    return ext_nonzero(x, _shift(y, params, False), params)


def crosses(x: Diagonal, y: Diagonal, params: PolygonParams) -> bool:
    return ext_nonzero(x, y, params) or ext_nonzero(y, x, params)


# -- precomputed bitmask tables -------------------------------------------------


class Tables:
    """Per-parameter lookup tables; bit ``t`` of a mask is diagonal ``t``.

    Built once per ``PolygonParams`` and never mutated afterwards.
    """

    def __init__(self, params: PolygonParams):
        self.params = params
        self.diagonals: tuple[Diagonal, ...] = tuple(enumerate_diagonals(params))
        self.index: dict[Diagonal, int] = {d: t for t, d in enumerate(self.diagonals)}
        self.size = len(self.diagonals)
        self.full = (1 << self.size) - 1
        D = self.diagonals
        self.ext_out = [0] * self.size  # y with Ext(x, y) != 0
        self.ext_in = [0] * self.size  # y with Ext(y, x) != 0
        for a, x in enumerate(D):
            for b, y in enumerate(D):
                if ext_nonzero(x, y, params):
                    self.ext_out[a] |= 1 << b
                    self.ext_in[b] |= 1 << a
        self.cross = [self.ext_out[a] | self.ext_in[a] for a in range(self.size)]
        self.hom_out = [0] * self.size
        self.hom_in = [0] * self.size
        for a, x in enumerate(D):
            for b, y in enumerate(D):
                if hom_nonzero(x, y, params):
                    self.hom_out[a] |= 1 << b
                    self.hom_in[b] |= 1 << a
        self.perm = {
            name: tuple(self.index[_RULES[name](d, params, True)] for d in D) for name in _BASE
        }
        self.perm_inv = {
            name: tuple(self.index[_RULES[name](d, params, False)] for d in D) for name in _BASE
        }

    def mask_of(self, ds: Iterable[Diagonal]) -> int:
        m = 0
        for d in ds:
            try:
                m |= 1 << self.index[d]
            except KeyError:
                raise ValueError(
                    f"{format_diagonal(d)} is not a diagonal for n={self.params.n}, p={self.params.p}"
                ) from None
        return m

    def members(self, mask: int) -> list[Diagonal]:
        out = []
        while mask:
            low = mask & -mask
            out.append(self.diagonals[low.bit_length() - 1])
            mask ^= low
        return out

    def map_mask(self, mask: int, name: str, inverse: bool = False) -> int:
        perm = (self.perm_inv if inverse else self.perm)[name]
        out = 0
        while mask:
            low = mask & -mask
            out |= 1 << perm[low.bit_length() - 1]
            mask ^= low
        return out


@lru_cache(maxsize=None)
def tables(params: PolygonParams) -> Tables:
    return Tables(params)
