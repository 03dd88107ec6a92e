"""Finite model of the P-points of X and the values used to describe it.

A function class is identified with its support ``A = X \\ Z(f)``, a nonempty
proper subset of the ``n`` points ``x1..xn``. Subsets are stored as bitmasks
with bit ``i`` standing for point ``x_{i+1}``.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Union

from .errors import InvalidSpaceError, PreconditionError

MAX_POINTS = 62


def check_points(n: int, low: int = 2, high: int = MAX_POINTS) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or not low <= n <= high:
        raise InvalidSpaceError(f"point count n={n!r} outside [{low}, {high}]")
    return n


@dataclass(frozen=True, slots=True, order=False)
class PointSet:
    """A subset of ``{x1, ..., xn}`` stored as a bitmask."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        check_points(self.n)
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits={self.bits} out of range for n={self.n}")

    @classmethod
    def of(cls, n: int, *points: int) -> PointSet:
        """Build from 1-based point indices: ``PointSet.of(3, 1, 3)`` is ``{x1,x3}``."""
        bits = 0
        for p in points:
            if not 1 <= p <= n:
                raise ValueError(f"point x{p} not in x1..x{n}")
            bits |= 1 << (p - 1)
        return cls(bits, n)

    @property
    def points(self) -> tuple[int, ...]:
        """Sorted 1-based point indices."""
        return tuple(i + 1 for i in range(self.n) if self.bits >> i & 1)

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    @property
    def is_vertex(self) -> bool:
        return 0 < self.bits < (1 << self.n) - 1

    def complement(self) -> PointSet:
        return complement(self)

    def __len__(self) -> int:
        return self.size

    def __contains__(self, point: int) -> bool:
        return 1 <= point <= self.n and bool(self.bits >> (point - 1) & 1)

    def __str__(self) -> str:
        return "{" + ",".join(f"x{p}" for p in self.points) + "}"

    def label(self) -> str:
        """Indicator-function name, e.g. ``1_{x1,x3}``."""
        return "1_{" + ",".join(f"x{p}" for p in self.points) + "}"


def complement(A: PointSet) -> PointSet:
    return PointSet(~A.bits & ((1 << A.n) - 1), A.n)


def _sorted_points(bits: int) -> list[int]:
    out = []
    i = 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return out


def order_lt(A: PointSet, B: PointSet) -> bool:
    """Level order: compare the increasing point sequences lexicographically.

    Only defined for sets of equal size over the same points.
    """
    if A.n != B.n or A.size != B.size:
        raise PreconditionError(f"order_lt needs same-level sets, got {A} and {B}")
    return _sorted_points(A.bits) < _sorted_points(B.bits)


def level(n: int, k: int) -> list[int]:
    """Bitmasks of all k-subsets of n points, in level order."""
    return [sum(1 << i for i in c) for c in combinations(range(n), k)]


def vertex_masks(n: int) -> list[int]:
    check_points(n)
    return [m for k in range(1, n) for m in level(n, k)]


def enumerate_vertices(n: int) -> list[PointSet]:
    """All nonempty proper subsets, by size and then level order."""
    return [PointSet(m, n) for m in vertex_masks(n)]


def iter_level(n: int, k: int) -> Iterator[PointSet]:
    for m in level(n, k):
        yield PointSet(m, n)


@functools.total_ordering
class Cardinal:
    """Finite cardinal, aleph-0, or the continuum. Nothing else is modelled."""

    __slots__ = ("_rank", "_value")

    def __init__(self, rank: int, value: int = 0) -> None:
        self._rank = rank
        self._value = value

    @classmethod
    def finite(cls, value: int) -> Cardinal:
        if value < 0:
            raise ValueError("cardinal must be nonnegative")
        return cls(0, int(value))

    @property
    def is_finite(self) -> bool:
        return self._rank == 0

    @property
    def value(self) -> int:
        if self._rank:
            raise ValueError(f"{self} has no integer value")
        return self._value

    def _key(self) -> tuple[int, int]:
        return (self._rank, self._value)

    @staticmethod
    def _coerce(other) -> Cardinal | None:
        if isinstance(other, Cardinal):
            return other
        if isinstance(other, int) and not isinstance(other, bool) and other >= 0:
            return Cardinal.finite(other)
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        return o is not None and self._key() == o._key()

    def __lt__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._key() < o._key()

    def __hash__(self) -> int:
        return hash(self._value) if self._rank == 0 else hash(("cardinal", self._rank))

    def __repr__(self) -> str:
        if self._rank == 0:
            return f"Cardinal.finite({self._value})"
        return "ALEPH0" if self._rank == 1 else "CONTINUUM"

    def __str__(self) -> str:
        if self._rank == 0:
            return str(self._value)
        return "aleph0" if self._rank == 1 else "continuum"

    def to_json(self) -> int | str:
        return self._value if self._rank == 0 else str(self)

    @classmethod
    def from_json(cls, value: int | str) -> Cardinal:
        if isinstance(value, int):
            return cls.finite(value)
        return {"aleph0": ALEPH0, "continuum": CONTINUUM}[value]


ALEPH0 = Cardinal(1)
CONTINUUM = Cardinal(2)


class GraphKind(enum.Enum):
    GAMMA = "gamma"
    AG = "ag"
    WGAMMA = "wgamma"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class FiniteIsolated:
    """``|X_P| = n`` with every P-point isolated."""

    n: int

    def __post_init__(self) -> None:
        check_points(self.n)


@dataclass(frozen=True)
class InfiniteIsolated:
    """Countably infinite set of isolated points (the C_F(X) case)."""


SpaceModel = Union[FiniteIsolated, InfiniteIsolated]
