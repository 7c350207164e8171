"""Moving boxes along ladders: regularization, locked boxes and deregularization.

``regularize`` pushes every box to the top of its ladder, giving the regular
(dominance-largest) member of a class. ``deregularize`` keeps locked boxes in
place and slides the rest to the bottom of their ladders, giving the
dominance-smallest member.
"""

import os
from collections import defaultdict
from typing import NamedTuple

from .crystal import ladder_of, ladder_positions
from .errors import DomainError, SizeLimitExceeded, require_modulus
from .partition import Box, Partition, as_partition, count_standard_tableaux, enumerate_partitions

LOCKED_I, LOCKED_II, LOCKED_BOTH, UNLOCKED = "locked-I", "locked-II", "locked-both", "unlocked"


def default_size_cap():
    return int(os.environ.get("CORECRYSTAL_MAX_N", "30"))


def _ladder_counts(lam, ell):
    counts = defaultdict(int)
    for box in lam.boxes():
        counts[ladder_of(box, ell)] += 1
    return counts


def _shape_from_boxes(boxes):
    rows = defaultdict(int)
    for r, _ in boxes:
        rows[r] += 1
    parts = [rows[r] for r in range(1, max(rows, default=0) + 1)]
    shape = Partition(sorted(parts, reverse=True))
    if set(shape.boxes()) != {Box(*b) for b in boxes}:
        raise AssertionError(f"boxes {sorted(boxes)} do not form a partition")
    return shape


def regularize(lam, ell):
    """Move every box to the top of its ladder."""
    require_modulus(ell)
    lam = as_partition(lam)
    if ell == 2:
        # Same rule with ladders of slope 1, kept for oracle use.
        counts = defaultdict(int)
        for r, c in lam.boxes():
            counts[r + c - 1] += 1
        boxes = [(k - j, 1 + j) for k, n in counts.items() for j in range(k - 1, k - 1 - n, -1)]
        return _shape_from_boxes(boxes)
    boxes = []
    for k, n in _ladder_counts(lam, ell).items():
        boxes.extend(ladder_positions(k, ell)[:n])
    return _shape_from_boxes(boxes)


def _ladder_test(lam, box, ell):
    """Every empty position below ``box`` on its ladder has an empty position directly above it."""
    row, col = box
    step = ell - 1
    r, c = row + step, col - 1
    while c >= 1:
        if (r, c) not in lam and (r - 1, c) in lam:
            return False
        r, c = r + step, c - 1
    return True


def locked_boxes(lam, ell):
    """Least set closed under the two locking rules, grown row by row from the top."""
    require_modulus(ell, 3)
    lam = as_partition(lam)
    locked = set()
    for row, length in enumerate(lam, 1):
        rightmost = 0
        for col in range(length, 0, -1):
            above = row == 1 or (row - 1, col) in locked
            if above and _ladder_test(lam, (row, col), ell):
                rightmost = col
                break
        locked.update((row, c) for c in range(1, rightmost + 1))
    return locked


def lock_labels(lam, ell):
    """Map each box to ``locked-I``, ``locked-II``, ``locked-both`` or ``unlocked``."""
    lam = as_partition(lam)
    locked = locked_boxes(lam, ell)
    labels = {}
    for box in lam.boxes():
        if box not in locked:
            labels[box] = UNLOCKED
            continue
        row, col = box
        first = (row == 1 or (row - 1, col) in locked) and _ladder_test(lam, box, ell)
        second = (row, col + 1) in locked
        labels[box] = LOCKED_BOTH if first and second else LOCKED_I if first else LOCKED_II
    return labels


def render_locks(lam, ell):
    labels = lock_labels(lam, ell)
    return "\n".join(
        " ".join("U" if labels[(r, c)] == UNLOCKED else "L" for c in range(1, p + 1))
        for r, p in enumerate(as_partition(lam), 1)
    )


class Arrangement(NamedTuple):
    """Pairing of source boxes with target positions on the same ladder."""

    moves: tuple

    def is_valid(self, ell):
        sources = [s for s, _ in self.moves]
        targets = [t for _, t in self.moves]
        if len(set(sources)) != len(sources) or len(set(targets)) != len(targets):
            return False
        if any(ladder_of(s, ell) != ladder_of(t, ell) for s, t in self.moves):
            return False
        try:
            _shape_from_boxes(targets)
        except AssertionError:
            return False
        return True

    def result(self):
        return _shape_from_boxes([t for _, t in self.moves])


def deregularization_arrangement(lam, ell):
    """Locked boxes stay; unlocked ones fill the lowest free spots of their ladder in order."""
    require_modulus(ell, 3)
    lam = as_partition(lam)
    locked = locked_boxes(lam, ell)
    by_ladder = defaultdict(list)
    for box in lam.boxes():
        by_ladder[ladder_of(box, ell)].append(box)
    moves = []
    for k, boxes in by_ladder.items():
        free = [p for p in reversed(ladder_positions(k, ell)) if p not in locked]
        movers = sorted((b for b in boxes if b not in locked), key=lambda b: -b[0])
        moves.extend((b, b) for b in boxes if b in locked)
        moves.extend((b, Box(*p)) for b, p in zip(movers, free))
    return Arrangement(tuple(moves))


def deregularize(lam, ell):
    """Dominance-smallest partition with the same regularization."""
    return deregularization_arrangement(lam, ell).result()


def regularization_class(lam, ell, cap=None):
    """Every partition of ``|lam|`` sharing ``lam``'s regularization."""
    lam = as_partition(lam)
    cap = default_size_cap() if cap is None else cap
    if lam.size > cap:
        raise SizeLimitExceeded(f"size {lam.size} exceeds the enumeration cap {cap}")
    target = regularize(lam, ell)
    return [mu for mu in enumerate_partitions(lam.size) if regularize(mu, ell) == target]


class DimensionReport(NamedTuple):
    n: int
    ell: int
    checked: int
    violations: tuple

    @property
    def ok(self):
        return not self.violations


def dimension_pair(lam, ell):
    """Standard tableau counts of the deregularized and regularized shapes."""
    return count_standard_tableaux(deregularize(lam, ell)), count_standard_tableaux(regularize(lam, ell))


def check_dimension_conjecture(n, ell, limit=None):
    """Compare tableau counts of the two ends of each class, for every partition of ``n``."""
    if n < 0:
        raise DomainError("n must be non-negative")
    violations = []
    checked = 0
    for lam in enumerate_partitions(n):
        low, high = (count_standard_tableaux(mu, limit) for mu in (deregularize(lam, ell), regularize(lam, ell)))
        checked += 1
        if low > high:
            violations.append((lam, low, high))
    return DimensionReport(n, ell, checked, tuple(violations))
