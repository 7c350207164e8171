"""Rim hooks and the partition classes defined through them.

Covers cores and weights, the column-divisibility (Carter) test, partitions
closed under horizontal hook removal, the Fayers triple test, its recursive
counterpart with horizontal and vertical hooks, the arm/leg classes, and the
two structural decompositions into a core plus hook data.
"""

from functools import lru_cache
from typing import NamedTuple

from .abacus import is_core
from .errors import (
    InvalidDecomposition,
    NotAJMPartition,
    NotAnEllPartition,
    require_modulus,
)
from .partition import Box, Partition, as_partition, hook_table, is_regular, transpose

HORIZONTAL, VERTICAL, OTHER = "horizontal", "vertical", "other"


class RimHook(NamedTuple):
    boxes: tuple
    kind: str
    remainder: Partition


def _hooks(lam, ell):
    lam = tuple(lam)
    conj = transpose(lam)
    table = hook_table(lam)
    found = []
    for a, row in enumerate(table, 1):
        for b, h in enumerate(row, 1):
            if h != ell:
                continue
            last = conj[b - 1]
            boxes = []
            for r in range(a, last + 1):
                left = b if r == last else max(b, lam[r])  # lam[r] is row r+1
                boxes.extend(Box(r, c) for c in range(left, lam[r - 1] + 1))
            if a == last:
                kind = HORIZONTAL
            elif lam[a - 1] == b:
                kind = VERTICAL
            else:
                kind = OTHER
            parts = list(lam)
            for r in range(a, last):
                parts[r - 1] = lam[r] - 1
            parts[last - 1] = b - 1
            found.append(RimHook(tuple(sorted(boxes)), kind, Partition(parts)))
    return tuple(found)


@lru_cache(maxsize=None)
def _hooks_cached(lam, ell):
    return _hooks(lam, ell)


def removable_rim_hooks(lam, ell):
    """All removable ``ell``-rim hooks, ordered by their top-left box."""
    require_modulus(ell)
    return list(_hooks_cached(tuple(as_partition(lam)), ell))


def adjacent(first, second):
    a, b = set(first.boxes), set(second.boxes)
    if a & b:
        raise ValueError("rim hooks overlap")
    return any((r + dr, c + dc) in b for r, c in a for dr, dc in ((0, 1), (1, 0), (0, -1), (-1, 0)))


def core_and_weight(lam, ell, policy="first"):
    """Strip rim hooks until none remain; ``policy`` picks the first or last hook each time."""
    require_modulus(ell)
    lam = as_partition(lam)
    weight = 0
    while True:
        hooks = _hooks_cached(tuple(lam), ell)
        if not hooks:
            return lam, weight
        lam = hooks[0 if policy == "first" else -1].remainder
        weight += 1


def is_carter(lam, ell):
    """Within each column, either every hook length is divisible by ``ell`` or none is."""
    require_modulus(ell)
    lam = as_partition(lam)
    table = hook_table(lam)
    for col in range(lam.part(1)):
        flags = {table[r][col] % ell == 0 for r in range(len(lam)) if col < lam[r]}
        if len(flags) > 1:
            return False
    return True


def _valuation(n, p):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def is_carter_padic(lam, p):
    """Column test with the exact power of ``p`` dividing each hook."""
    require_modulus(p)
    lam = as_partition(lam)
    table = hook_table(lam)
    for col in range(lam.part(1)):
        values = {_valuation(table[r][col], p) for r in range(len(lam)) if col < lam[r]}
        if len(values) > 1:
            return False
    return True


@lru_cache(maxsize=None)
def _ell_partition(lam, ell):
    if not is_regular(lam, ell):
        return False
    hooks = _hooks_cached(lam, ell)
    if any(h.kind != HORIZONTAL for h in hooks):
        return False
    return all(_ell_partition(tuple(h.remainder), ell) for h in hooks)


def is_ell_partition(lam, ell):
    """Regular, and stays regular with only horizontal hooks however horizontal hooks are removed."""
    require_modulus(ell)
    return _ell_partition(tuple(as_partition(lam)), ell)


def _require_at_least_three(ell):
    require_modulus(ell, 3)


def is_jm(lam, ell):
    """No box with hook divisible by ``ell`` whose row and column both hold a non-divisible hook."""
    _require_at_least_three(ell)
    lam = as_partition(lam)
    table = hook_table(lam)
    row_free = [any(h % ell for h in row) for row in table]
    col_free = [False] * lam.part(1)
    for row in table:
        for c, h in enumerate(row):
            if h % ell:
                col_free[c] = True
    return not any(
        h % ell == 0 and row_free[r] and col_free[c]
        for r, row in enumerate(table)
        for c, h in enumerate(row)
    )


@lru_cache(maxsize=None)
def _generalized(lam, ell):
    hooks = _hooks_cached(lam, ell)
    if any(h.kind == OTHER for h in hooks):
        return False
    for first in hooks:
        for second in _hooks_cached(tuple(first.remainder), ell):
            if {first.kind, second.kind} == {HORIZONTAL, VERTICAL} and adjacent(first, second):
                return False
    return all(_generalized(tuple(h.remainder), ell) for h in hooks)


def is_generalized_ell(lam, ell):
    """Only straight hooks, no perpendicular adjacent pair across one removal, recursively."""
    _require_at_least_three(ell)
    return _generalized(tuple(as_partition(lam)), ell)


def _arms_legs(lam):
    conj = transpose(lam)
    for r, p in enumerate(lam, 1):
        for c in range(1, p + 1):
            yield p - c, conj[c - 1] - r


def is_L_partition(lam, ell):
    """No divisible hook whose arm and leg are each below ``ell - 1`` times the other.

    Both inequalities must hold at the offending box; requiring only one would
    reject single rows such as ``(ell,)``.
    """
    _require_at_least_three(ell)
    for a, g in _arms_legs(as_partition(lam)):
        h = a + g + 1
        if h % ell == 0 and a < (ell - 1) * g and g < (ell - 1) * a:
            return False
    return True


def is_L_partition_lyle(lam, ell):
    """Equivalent form: no divisible hook ``h`` with ``h / ell <= min(arm, leg)``."""
    _require_at_least_three(ell)
    for a, g in _arms_legs(as_partition(lam)):
        h = a + g + 1
        if h % ell == 0 and h // ell <= min(a, g):
            return False
    return True


def is_ladder_node(lam, ell):
    """No box whose hook length equals ``ell`` times its arm."""
    _require_at_least_three(ell)
    return all(a + g + 1 != ell * a for a, g in _arms_legs(as_partition(lam)))


# ---------------------------------------------------------------------------
# Decompositions


class EllDecomposition(NamedTuple):
    """Inner core, number of stair rows stacked on it, and horizontal hooks per top row."""

    inner_core: Partition
    stair_rows: int
    row_hooks: Partition


class JMDecomposition(NamedTuple):
    inner_core: Partition
    stair_rows: int
    stair_cols: int
    row_hooks: Partition
    col_hooks: Partition


def _leading_steps(parts, step):
    """Count leading successive differences equal to ``step``, the last part compared with 0."""
    padded = list(parts) + [0]
    count = 0
    while count < len(parts) and padded[count] - padded[count + 1] == step:
        count += 1
    return count


def _stair_core(inner, rows, ell):
    first = inner[0] if inner else 0
    return [first + k * (ell - 1) for k in range(rows, 0, -1)] + list(inner)


def compose_ell(decomposition, ell):
    inner, rows, hooks = decomposition
    inner, hooks = as_partition(inner), as_partition(hooks)
    require_modulus(ell)
    if not is_core(inner, ell):
        raise InvalidDecomposition(f"{tuple(inner)} is not a {ell}-core")
    if inner.part(1) - inner.part(2) == ell - 1:
        raise InvalidDecomposition("inner core has a first step of l-1")
    if rows < 0 or len(hooks) > rows + 1:
        raise InvalidDecomposition("row hooks must have at most stair_rows + 1 parts")
    parts = _stair_core(inner, rows, ell)
    parts += [0] * max(0, rows + 1 - len(parts))
    for j, k in enumerate(hooks):
        parts[j] += ell * k
    return Partition(parts)


def decompose_ell(lam, ell):
    lam = as_partition(lam)
    if not is_ell_partition(lam, ell):
        raise NotAnEllPartition(f"{tuple(lam)} is not a {ell}-partition")
    core, _ = core_and_weight(lam, ell)
    rows = _leading_steps(core, ell - 1)
    inner = Partition(core[rows:])
    hooks = Partition((lam.part(j) - core.part(j)) // ell for j in range(1, rows + 2))
    result = EllDecomposition(inner, rows, hooks)
    assert compose_ell(result, ell) == lam, (lam, result)
    return result


def _add_to_columns(parts, col_hooks, ell):
    conj = list(transpose(parts))
    conj += [0] * max(0, len(col_hooks) - len(conj))
    for j, k in enumerate(col_hooks):
        conj[j] += ell * k
    return transpose(Partition(conj))


def _validate_jm(inner, rows, cols, row_hooks, col_hooks, ell):
    if not is_core(inner, ell):
        raise InvalidDecomposition(f"{tuple(inner)} is not a {ell}-core")
    conj = transpose(inner)
    if inner.part(1) - inner.part(2) >= ell - 1 or conj.part(1) - conj.part(2) >= ell - 1:
        raise InvalidDecomposition("inner core has a first row or column step of at least l-1")
    if rows < 0 or cols < 0 or len(row_hooks) > rows + 1 or len(col_hooks) > cols + 1:
        raise InvalidDecomposition("hook partitions are too long for the stair counts")
    if not inner and row_hooks.part(rows + 1) and col_hooks.part(cols + 1):
        raise InvalidDecomposition("empty inner core needs row_hooks[r+1] = 0 or col_hooks[s+1] = 0")


def jm_core(inner, rows, cols, ell):
    """The core underlying a JM decomposition: row stairs above, column stairs to the left."""
    inner = as_partition(inner)
    first = inner.part(1)
    parts = [cols + first + k * (ell - 1) for k in range(rows, 0, -1)]
    parts += [cols + p for p in inner]
    for c in range(cols, 0, -1):
        parts += [c] * (ell - 1)
    return Partition(parts)


def compose_jm(decomposition, ell):
    inner, rows, cols, row_hooks, col_hooks = decomposition
    inner, row_hooks, col_hooks = as_partition(inner), as_partition(row_hooks), as_partition(col_hooks)
    _require_at_least_three(ell)
    _validate_jm(inner, rows, cols, row_hooks, col_hooks, ell)
    parts = list(jm_core(inner, rows, cols, ell))
    parts += [0] * max(0, rows + 1 - len(parts))
    for j, k in enumerate(row_hooks):
        parts[j] += ell * k
    return _add_to_columns(Partition(parts), col_hooks, ell)


def decompose_jm(lam, ell):
    lam = as_partition(lam)
    if not is_jm(lam, ell):
        raise NotAJMPartition(f"{tuple(lam)} is not a ({ell},0)-JM partition")
    core, _ = core_and_weight(lam, ell)
    conj_core, conj_lam = transpose(core), transpose(lam)
    rows = _leading_steps(core, ell - 1)
    cols = _leading_steps(conj_core, ell - 1)
    inner = Partition(max(0, p - cols) for p in core[rows:])
    row_hooks = Partition((lam.part(j) - core.part(j)) // ell for j in range(1, rows + 2))
    col_hooks = Partition((conj_lam.part(j) - conj_core.part(j)) // ell for j in range(1, cols + 2))
    result = JMDecomposition(inner, rows, cols, row_hooks, col_hooks)
    assert compose_jm(result, ell) == lam, (lam, result)
    return result
