"""Partitions, Young diagrams and the small-n enumeration everything else leans on.

Boxes are addressed as 1-indexed ``(row, col)`` pairs. A partition is an
immutable tuple of positive parts; trailing zeros are dropped on construction,
so ``Partition((3, 1, 0)) == (3, 1)``.
"""

import re
from functools import lru_cache
from typing import NamedTuple

from .errors import BoxOutsideDiagram, CountOverflow, DomainError, SizeMismatch, require_modulus


class Box(NamedTuple):
    row: int
    col: int


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts=()):
        if isinstance(parts, Partition):
            return parts
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise DomainError(f"parts must be weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise DomainError(f"parts must be non-negative: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    def __str__(self):
        return format_partition(self)

    @property
    def size(self):
        return sum(self)

    @property
    def length(self):
        return len(self)

    def part(self, row):
        """Length of ``row`` (1-indexed); zero past the last row."""
        return self[row - 1] if 1 <= row <= len(self) else 0

    def __contains__(self, box):
        row, col = box
        return row >= 1 and col >= 1 and col <= self.part(row)

    def boxes(self):
        return [Box(r, c) for r, p in enumerate(self, 1) for c in range(1, p + 1)]

    def transpose(self):
        return transpose(self)


def as_partition(lam):
    return lam if isinstance(lam, Partition) else Partition(lam)


@lru_cache(maxsize=None)
def _transpose(lam):
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= c) for c in range(1, lam[0] + 1))


def transpose(lam):
    return Partition(_transpose(tuple(as_partition(lam))))


def _check_box(lam, box):
    if box not in lam:
        raise BoxOutsideDiagram(f"box {tuple(box)} is not in {tuple(lam)}")


def arm(lam, box):
    lam = as_partition(lam)
    _check_box(lam, box)
    return lam.part(box[0]) - box[1]


def leg(lam, box):
    lam = as_partition(lam)
    _check_box(lam, box)
    return transpose(lam).part(box[1]) - box[0]


def hook_length(lam, box):
    return arm(lam, box) + leg(lam, box) + 1


@lru_cache(maxsize=None)
def _hook_table(lam):
    conj = _transpose(lam)
    return tuple(
        tuple(p - c + conj[c - 1] - r + 1 for c in range(1, p + 1))
        for r, p in enumerate(lam, 1)
    )


def hook_table(lam):
    """Row-major tuple of hook-length rows; ``hook_table(lam)[r-1][c-1]`` is h(r, c)."""
    return _hook_table(tuple(as_partition(lam)))


def residue(box, ell):
    require_modulus(ell)
    return (box[1] - box[0]) % ell


def is_regular(lam, ell):
    """No part value repeats ``ell`` or more times."""
    lam = as_partition(lam)
    require_modulus(ell)
    return all(lam[j] != lam[j + ell - 1] for j in range(len(lam) - ell + 1))


def dominance_leq(lam, mu):
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.size != mu.size:
        raise SizeMismatch(f"{tuple(lam)} and {tuple(mu)} have different sizes")
    a = b = 0
    for j in range(max(len(lam), len(mu))):
        a += lam.part(j + 1)
        b += mu.part(j + 1)
        if a > b:
            return False
    return True


def addable_corners(lam):
    """Every position whose addition keeps a partition, top row first."""
    lam = as_partition(lam)
    return [Box(r, lam.part(r) + 1) for r in range(1, len(lam) + 2)
            if r == 1 or lam.part(r - 1) > lam.part(r)]


def removable_corners(lam):
    lam = as_partition(lam)
    return [Box(r, p) for r, p in enumerate(lam, 1) if lam.part(r + 1) < p]


def addable_boxes(lam, ell, i):
    return [b for b in addable_corners(lam) if residue(b, ell) == i]


def removable_boxes(lam, ell, i):
    return [b for b in removable_corners(lam) if residue(b, ell) == i]


def add_box(lam, box):
    parts = list(as_partition(lam))
    row, col = box
    if row == len(parts) + 1:
        parts.append(0)
    if not (1 <= row <= len(parts)) or parts[row - 1] + 1 != col:
        raise DomainError(f"{tuple(box)} is not addable to {tuple(lam)}")
    parts[row - 1] += 1
    return Partition(parts)


def remove_box(lam, box):
    parts = list(as_partition(lam))
    row, col = box
    if not (1 <= row <= len(parts)) or parts[row - 1] != col:
        raise DomainError(f"{tuple(box)} is not removable from {tuple(lam)}")
    parts[row - 1] -= 1
    return Partition(parts)


def covers(lam, mu):
    """True iff ``mu`` is ``lam`` plus one box."""
    lam, mu = as_partition(lam), as_partition(mu)
    return mu.size == lam.size + 1 and all(lam.part(r) <= mu.part(r) for r in range(1, len(lam) + 1))


def _partitions(n, largest):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def enumerate_partitions(n):
    """All partitions of ``n`` in descending lexicographic order."""
    if n < 0:
        raise DomainError("n must be non-negative")
    for parts in _partitions(n, n):
        yield Partition(parts)


@lru_cache(maxsize=None)
def _syt(lam):
    if not lam:
        return 1
    total = 0
    for r, p in enumerate(lam):
        if r + 1 == len(lam) or lam[r + 1] < p:
            shrunk = list(lam)
            shrunk[r] -= 1
            while shrunk and shrunk[-1] == 0:
                shrunk.pop()
            total += _syt(tuple(shrunk))
    return total


def count_standard_tableaux(lam, limit=None):
    """Number of standard Young tableaux of shape ``lam``, by path counting.

    Counts are exact Python integers. Passing ``limit`` (for example
    ``2**63 - 1``) makes a count above it raise ``CountOverflow`` instead of
    being returned, for callers that store results in fixed-width fields.
    """
    lam = as_partition(lam)
    count = _syt(tuple(lam))
    if limit is not None and count > limit:
        raise CountOverflow(f"standard tableau count of {tuple(lam)} exceeds {limit}")
    return count


_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")


def parse_partition(text):
    """Parse ``"8,5,4,1"`` or exponent shorthand ``"6,1^7"``; empty text is the empty partition."""
    text = text.strip().strip("()[]")
    if text in ("", "0", "∅", "empty"):
        return Partition()
    parts = []
    for token in text.split(","):
        m = _TOKEN.match(token)
        if not m:
            raise DomainError(f"cannot parse partition token {token!r}")
        value, times = int(m.group(1)), int(m.group(2) or 1)
        parts.extend([value] * times)
    return Partition(parts)


def format_partition(lam):
    return ",".join(str(p) for p in lam)
