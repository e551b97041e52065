"""Partitions, conjugation, strips and constrained enumeration.

A partition is stored as a tuple of positive, weakly decreasing integers.
:class:`Partition` is a ``tuple`` subclass, so every function here also
accepts plain tuples that are already normalized.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Optional, Sequence

from . import kernels

__all__ = [
    "Partition",
    "conjugate",
    "is_horizontal_strip",
    "is_vertical_strip",
    "contains",
    "odd_column_count",
    "odd_row_count",
    "sharp_partition",
    "in_par_sp",
    "in_par_o",
    "enumerate_partitions",
    "partitions_of",
    "parse_partition",
    "format_partition",
    "column",
    "add_cell_neighbors",
    "remove_cell_neighbors",
    "add_horizontal_strip",
    "remove_horizontal_strip",
    "add_vertical_strip",
    "remove_vertical_strip",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; trailing zeros dropped."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def part(self, i: int) -> int:
        """1-based part access, zero past the end."""
        return self[i - 1] if 0 < i <= len(self) else 0

    def __repr__(self) -> str:
        return format_partition(self)


EMPTY = Partition()


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return EMPTY
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """True iff the diagram of ``inner`` sits inside ``outer``."""
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def is_horizontal_strip(inner: Sequence[int], outer: Sequence[int]) -> bool:
    return kernels.is_horizontal_strip(tuple(inner), tuple(outer))


def is_vertical_strip(inner: Sequence[int], outer: Sequence[int]) -> bool:
    return kernels.is_vertical_strip(tuple(inner), tuple(outer))


def odd_column_count(lam: Sequence[int]) -> int:
    """c(lambda): number of columns of odd length."""
    return sum(1 for c in conjugate(lam) if c % 2)


def odd_row_count(lam: Sequence[int]) -> int:
    """r(lambda): number of rows of odd length."""
    return sum(1 for p in lam if p % 2)


def in_par_sp(lam: Sequence[int], n: int) -> bool:
    return len(lam) <= n


def in_par_o(lam: Sequence[int], N: int) -> bool:
    conj = conjugate(lam)
    first = conj[0] if conj else 0
    second = conj[1] if len(conj) > 1 else 0
    return first + second <= N


def sharp_partition(lam: Sequence[int], N: int) -> Partition:
    """Replace the first column (length l(lam)) by a column of length N - l(lam)."""
    if not in_par_o(lam, N):
        raise ValueError(f"{format_partition(lam)} is not a label for O_{N}")
    conj = list(conjugate(lam))
    new_first = N - len(lam)
    rest = conj[1:]
    return conjugate([new_first] + rest) if new_first or rest else EMPTY


def column(m: int) -> Partition:
    """The one-column partition (1^m)."""
    return Partition([1] * m)


def partitions_of(size: int, max_part: Optional[int] = None,
                  max_length: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of ``size`` in reverse-lexicographic order."""
    if max_part is None:
        max_part = size
    if max_length is None:
        max_length = size

    def rec(remaining, cap, slots):
        if remaining == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(remaining, cap), 0, -1):
            if first * slots < remaining:
                break
            for tail in rec(remaining - first, first, slots - 1):
                yield (first,) + tail

    for parts in rec(size, max_part, max_length):
        yield Partition(parts)


def enumerate_partitions(max_size: int, max_length: Optional[int] = None,
                         two_column_bound: Optional[int] = None,
                         max_part: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of size <= ``max_size`` passing the constraints.

    Ordered by size, then reverse-lexicographically within a size.
    ``max_length`` gives Par(Sp_2n) with n = max_length; ``two_column_bound``
    gives Par(O_N) with N = two_column_bound.
    """
    if max_size < 0:
        raise ValueError("max_size must be nonnegative")
    for size in range(max_size + 1):
        for lam in partitions_of(size, max_part=max_part, max_length=max_length):
            if two_column_bound is not None and not in_par_o(lam, two_column_bound):
                continue
            yield lam


def add_cell_neighbors(lam: Sequence[int]) -> list[Partition]:
    """Partitions obtained by adding one cell, top row first."""
    out = []
    parts = list(lam)
    for i in range(len(parts) + 1):
        prev = parts[i - 1] if i else None
        cur = parts[i] if i < len(parts) else 0
        if prev is None or prev > cur:
            new = parts[:]
            if i < len(parts):
                new[i] += 1
            else:
                new.append(1)
            out.append(Partition(new))
    return out


def remove_cell_neighbors(lam: Sequence[int]) -> list[Partition]:
    """Partitions obtained by removing one cell, top row first."""
    out = []
    parts = list(lam)
    for i in range(len(parts)):
        nxt = parts[i + 1] if i + 1 < len(parts) else 0
        if parts[i] > nxt:
            new = parts[:]
            new[i] -= 1
            out.append(Partition(new))
    return out


def _ranges_product(lows, highs, size):
    """Vectors v with lows[i] <= v[i] <= highs[i] and sum(v - lows) == size (None: any size)."""
    k = len(lows)
    room = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        room[i] = room[i + 1] + highs[i] - lows[i]

    def rec(i, left, acc):
        if i == k:
            if left is None or left == 0:
                yield tuple(acc)
            return
        hi = highs[i] - lows[i]
        if left is not None:
            if left > room[i]:
                return
            hi = min(hi, left)
        for d in range(hi, -1, -1):
            acc.append(lows[i] + d)
            yield from rec(i + 1, None if left is None else left - d, acc)
            acc.pop()

    yield from rec(0, size, [])


def remove_horizontal_strip(mu: Sequence[int], size: Optional[int] = None) -> Iterator[Partition]:
    """All xi with mu/xi a horizontal strip (of the given size, if any)."""
    mu = tuple(mu)
    lows = [mu[i + 1] if i + 1 < len(mu) else 0 for i in range(len(mu))]
    target = None if size is None else sum(mu) - size - sum(lows)
    if target is not None and target < 0:
        return
    for parts in _ranges_product(lows, list(mu), target):
        yield Partition(parts)


def add_horizontal_strip(xi: Sequence[int], size: int,
                         max_length: Optional[int] = None) -> Iterator[Partition]:
    """All lam with lam/xi a horizontal strip of ``size`` cells."""
    xi = tuple(xi)
    rows = len(xi) + 1
    if max_length is not None:
        rows = min(rows, max_length)
        if len(xi) > max_length:
            return
    if rows == 0:
        if size == 0:
            yield Partition()
        return
    lows = [xi[i] if i < len(xi) else 0 for i in range(rows)]
    highs = [lows[0] + size] + [xi[i - 1] for i in range(1, rows)]
    for parts in _ranges_product(lows, highs, size):
        yield Partition(parts)


def add_vertical_strip(mu: Sequence[int], size: int,
                       max_length: Optional[int] = None) -> Iterator[Partition]:
    """All xi with xi/mu a vertical strip of ``size`` cells."""
    max_part = None if max_length is None else max_length
    for conj in add_horizontal_strip(conjugate(mu), size):
        if max_part is None or not conj or conj[0] <= max_part:
            yield conjugate(conj)


def remove_vertical_strip(xi: Sequence[int], size: Optional[int] = None) -> Iterator[Partition]:
    """All lam with xi/lam a vertical strip (of the given size, if any)."""
    for conj in remove_horizontal_strip(conjugate(xi), size):
        yield conjugate(conj)


def parse_partition(text: str) -> Partition:
    """Parse the bracket syntax ``"[3,1]"``; ``"[]"`` is the empty partition."""
    try:
        value = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed partition {text!r}") from exc
    if not isinstance(value, list) or not all(isinstance(v, int) and not isinstance(v, bool)
                                              for v in value):
        raise ValueError(f"malformed partition {text!r}")
    return Partition(value)


def format_partition(lam: Sequence[int]) -> str:
    return "[" + ",".join(str(p) for p in lam) + "]"
