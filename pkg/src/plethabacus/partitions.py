"""Partitions, skew shapes and rims of Young diagrams.

Conventions: partitions store no trailing zeros, boxes are 1-based with
row 1 at the top (English orientation), and comparisons treat missing
parts as zeros.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple


class InvalidPartition(ValueError):
    """Input is not a weakly decreasing sequence of non-negative integers."""


class NotContained(ValueError):
    """Inner shape of a skew pair is not contained in the outer shape."""


class Box(NamedTuple):
    row: int
    column: int


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers; () is the empty partition."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(a) for a in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(a < 1 for a in parts):
            raise InvalidPartition(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidPartition(f"parts must be weakly decreasing: {parts}")

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __repr__(self):
        return f"Partition{self.parts!r}"

    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """The i-th part, 1-based, zero beyond the last row."""
        if i < 1:
            raise IndexError("rows are numbered from 1")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def contains(self, other: "Partition") -> bool:
        """Containment of Young diagrams, padding with zeros."""
        return all(self.part(i) >= other.part(i) for i in range(1, len(other) + 1))

    def boxes(self) -> Iterator[Box]:
        for i, row_len in enumerate(self.parts, start=1):
            for j in range(1, row_len + 1):
                yield Box(i, j)

    def has_box(self, row: int, column: int) -> bool:
        return 1 <= row <= len(self.parts) and 1 <= column <= self.parts[row - 1]

    def to_json(self) -> list[int]:
        return list(self.parts)


def make_partition(parts: Iterable[int]) -> Partition:
    """Build a Partition, stripping trailing zeros; rejects bad input."""
    seq = [int(a) for a in parts]
    if any(a < 0 for a in seq):
        raise InvalidPartition(f"negative part in {seq}")
    if any(seq[i] < seq[i + 1] for i in range(len(seq) - 1)):
        raise InvalidPartition(f"not weakly decreasing: {seq}")
    while seq and seq[-1] == 0:
        seq.pop()
    return Partition(tuple(seq))


@dataclass(frozen=True)
class SkewPartition:
    """A pair outer/inner with inner contained in outer."""

    outer: Partition
    inner: Partition

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise NotContained(f"{self.inner} is not contained in {self.outer}")

    def size(self) -> int:
        return self.outer.size() - self.inner.size()

    def is_empty(self) -> bool:
        return self.size() == 0

    def boxes(self) -> set[Box]:
        return {b for b in self.outer.boxes() if not self.inner.has_box(*b)}

    def to_json(self) -> dict:
        return {"outer": self.outer.to_json(), "inner": self.inner.to_json()}


def make_skew(outer: Partition, inner: Partition) -> SkewPartition:
    """Build a skew shape; raises NotContained unless inner fits in outer."""
    return SkewPartition(outer, inner)


def rim(shape: Partition) -> set[Box]:
    """Boxes (i, j) of the diagram with (i+1, j+1) outside it."""
    return {b for b in shape.boxes() if not shape.has_box(b.row + 1, b.column + 1)}


def minimal_distinct_row(skew: SkewPartition) -> int | None:
    """Least row index where outer and inner differ, None for the empty skew."""
    for i in range(1, len(skew.outer) + 1):
        if skew.outer.part(i) > skew.inner.part(i):
            return i
    return None


def partitions_of_size(n: int) -> Iterator[Partition]:
    """All partitions of n, in descending lexicographic order."""

    def gen(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    for parts in gen(n, n):
        yield Partition(parts)


def partitions_up_to(n: int) -> Iterator[Partition]:
    """All partitions of every size from 0 through n."""
    for k in range(n + 1):
        yield from partitions_of_size(k)


def partitions_of_size_containing(n: int, inner: Partition) -> Iterator[Partition]:
    """Partitions of n whose diagram contains inner."""
    if inner.size() > n:
        return
    for lam in partitions_of_size(n):
        if lam.contains(inner):
            yield lam


def subpartitions_of_size(shape: Partition, k: int) -> Iterator[Partition]:
    """Partitions of k contained in shape."""
    for mu in partitions_of_size(k):
        if shape.contains(mu):
            yield mu
