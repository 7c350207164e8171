"""The bijection from ``ell``-cores with first part ``k`` to ``(ell-1)``-cores with first part at most ``k``.

Four descriptions are provided and cross-checked: deleting a runner from the
abacus (``phi``), deleting rows from the diagram (``phi_rows``), a rotation in
root-lattice coordinates (``phi_geometric``), and a subword of the canonical
reduced word (``phi_subexpression``). The affine symmetric group action on
cores and the bounded-partition correspondence (``lm_rho``) live here too.
"""

from typing import NamedTuple

from .abacus import BetaSet, beta_set, from_root_vector, is_core, to_root_vector
from .errors import DomainError, NonzeroSum, NotACore, require_modulus
from .partition import (
    Partition,
    add_box,
    addable_boxes,
    as_partition,
    hook_table,
    remove_box,
    removable_boxes,
    transpose,
)

ASCENT, DESCENT, NEITHER = "ascent", "descent", "neither"


def _require_core(lam, ell):
    require_modulus(ell)
    if not is_core(lam, ell):
        raise NotACore(f"{tuple(lam)} is not a {ell}-core")


def rightmost_max_index(vector):
    """0-based index of the rightmost largest coordinate."""
    best = max(vector)
    return max(j for j, a in enumerate(vector) if a == best)


class CoxeterWord(tuple):
    """Generator indices, applied left to right."""

    __slots__ = ()

    def __str__(self):
        return "".join(f"s{i}" for i in self) or "e"


# ---------------------------------------------------------------------------
# The bijection


def phi(lam, ell):
    """Delete the runner holding the largest bead (the last runner when there are no beads)."""
    lam = as_partition(lam)
    _require_core(lam, ell)
    beads = beta_set(lam)
    removed = beads.positions[0] % ell if beads.positions else ell - 1
    kept = []
    for p in beads.positions:
        level, runner = divmod(p, ell)
        if runner != removed:
            kept.append(level * (ell - 1) + (runner if runner < removed else runner - 1))
    return BetaSet(tuple(kept)).partition()


def phi_rows(lam, ell):
    """Delete the rows whose first-column hook is congruent to the corner hook."""
    lam = as_partition(lam)
    _require_core(lam, ell)
    if not lam:
        return lam
    hooks = beta_set(lam).positions
    return Partition(p for p, h in zip(lam, hooks) if (h - hooks[0]) % ell)


def phi_inverse(mu, ell, k):
    """Insert a flush runner whose top bead follows every bead of ``mu`` and exactly ``k`` gaps."""
    mu = as_partition(mu)
    require_modulus(ell)
    if ell > 2:
        _require_core(mu, ell - 1)
    elif mu:
        raise NotACore("the only 1-core is the empty partition")
    if mu.part(1) > k:
        raise DomainError(f"first part {mu.part(1)} exceeds k = {k}")
    if k == 0:
        return Partition()
    old = beta_set(mu)
    beads = set(old.positions)
    gaps = 0
    entry = -1
    while gaps < k:
        entry += 1
        if entry not in beads:
            gaps += 1
    slot = max(entry, old.positions[0] if old.positions else -1)
    level, col = divmod(slot, ell - 1)
    new_runner = col + 1
    positions = []
    for p in old.positions:
        lv, r = divmod(p, ell - 1)
        positions.append(lv * ell + (r if r < new_runner else r + 1))
    positions += [lv * ell + new_runner for lv in range(0, level + 1)]
    lam = BetaSet(tuple(sorted(positions, reverse=True))).partition()
    assert lam.part(1) == k and phi(lam, ell) == mu, (mu, ell, k, lam)
    return lam


def psi_step(vector):
    """Rotate right by one and add 1 to the new first coordinate."""
    vector = tuple(vector)
    if not vector:
        raise DomainError("empty vector")
    return (vector[-1] + 1,) + vector[:-1]


def psi_power(vector, times):
    for _ in range(times):
        vector = psi_step(vector)
    return tuple(vector)


def phi_geometric(vector, ell=None):
    """Root-lattice form: drop the rightmost largest coordinate ``a`` and rotate ``a`` times."""
    vector = tuple(int(a) for a in vector)
    ell = len(vector) if ell is None else ell
    if len(vector) != ell:
        raise DomainError(f"expected {ell} coordinates")
    if sum(vector) != 0:
        raise NonzeroSum(f"coordinates of {vector} do not sum to zero")
    j = rightmost_max_index(vector)
    return psi_power(vector[:j] + vector[j + 1:], vector[j])


def first_part_from_vector(vector, ell=None):
    """First part of the core with these root-lattice coordinates, by both closed forms."""
    vector = tuple(vector)
    ell = len(vector) if ell is None else ell
    if sum(vector) != 0:
        raise NonzeroSum(f"coordinates of {vector} do not sum to zero")
    j = rightmost_max_index(vector)
    top = vector[j]
    by_level = (top - 1) * ell + (j + 1)
    by_gaps = sum(top - a for a in vector[:j]) + sum(top - a - 1 for a in vector[j + 1:])
    assert by_level == by_gaps, (vector, by_level, by_gaps)
    return by_level


def hyperplane_check(vector, ell, k):
    """Coordinate ``k mod ell`` (taken in 1..ell) equals ``ceil(k / ell)``."""
    vector = tuple(vector)
    if sum(vector) != 0:
        raise NonzeroSum(f"coordinates of {vector} do not sum to zero")
    if k < 0:
        raise DomainError("k must be non-negative")
    index = (k - 1) % ell + 1
    return vector[index - 1] == -(-k // ell)


# ---------------------------------------------------------------------------
# Affine symmetric group on cores


def ascent_descent(lam, ell, i):
    vector = to_root_vector(lam, ell)
    left, right = vector[i - 1], vector[i] - (1 if i == 0 else 0)
    if left > right:
        return ASCENT
    if left < right:
        return DESCENT
    return NEITHER


def apply_si(lam, ell, i):
    """Add every addable ``i``-box of a core, or remove every removable one."""
    lam = as_partition(lam)
    _require_core(lam, ell)
    if not 0 <= i < ell:
        raise DomainError(f"generator {i} is outside 0..{ell - 1}")
    kind = ascent_descent(lam, ell, i)
    if kind == ASCENT:
        for box in addable_boxes(lam, ell, i):
            lam = add_box(lam, box)
    elif kind == DESCENT:
        for box in reversed(removable_boxes(lam, ell, i)):
            lam = remove_box(lam, box)
    return lam


def apply_si_to_vector(vector, i):
    """Reflection of root-lattice coordinates matching ``apply_si``."""
    v = list(vector)
    if i == 0:
        v[0], v[-1] = v[-1] + 1, v[0] - 1
    else:
        v[i - 1], v[i] = v[i], v[i - 1]
    return tuple(v)


def _bottom_residue(lam, ell):
    return (lam[-1] - len(lam)) % ell


def canonical_word(lam, ell):
    """Reduced word whose letters, applied in order, strip ``lam`` down to the empty core."""
    lam = as_partition(lam)
    _require_core(lam, ell)
    letters = []
    while lam:
        i = _bottom_residue(lam, ell)
        assert ascent_descent(lam, ell, i) == DESCENT
        letters.append(i)
        lam = apply_si(lam, ell, i)
    return CoxeterWord(letters)


def coxeter_length(lam, ell):
    """Sum over residues of the longest row ending in that residue."""
    lam = as_partition(lam)
    _require_core(lam, ell)
    longest = {}
    for r, p in enumerate(lam, 1):
        res = (p - r) % ell
        longest[res] = max(longest.get(res, 0), p)
    return sum(longest.values())


class Subexpression(NamedTuple):
    word: CoxeterWord
    kept_positions: tuple  # 0-based positions in ``word`` that survive
    relabelled: CoxeterWord


def phi_subexpression(lam, ell):
    """Mark the letters of the canonical word that do not shorten the first row.

    A letter survives when, just before it is applied, the first and last rows
    end in different residues. Surviving letters are renamed by replaying the
    reduction on the image core at modulus ``ell - 1``.
    """
    lam = as_partition(lam)
    require_modulus(ell, 3)
    word = canonical_word(lam, ell)
    kept, renamed = [], []
    current, image = lam, phi(lam, ell)
    for pos, letter in enumerate(word):
        nxt = apply_si(current, ell, letter)
        if (current[0] - 1) % ell != _bottom_residue(current, ell):
            new_letter = _bottom_residue(image, ell - 1)
            kept.append(pos)
            renamed.append(new_letter)
            image = apply_si(image, ell - 1, new_letter)
        assert phi(nxt, ell) == image, (lam, pos)
        current = nxt
    return Subexpression(word, tuple(kept), CoxeterWord(renamed))


# ---------------------------------------------------------------------------
# Bounded partitions


class LMPair(NamedTuple):
    skew_boxes: frozenset
    bounded: Partition


def lm_pair(lam, ell):
    lam = as_partition(lam)
    _require_core(lam, ell)
    table = hook_table(lam)
    skew = frozenset((r, c) for r, row in enumerate(table, 1) for c, h in enumerate(row, 1) if h < ell)
    counts = [sum(1 for h in row if h < ell) for row in table]
    return LMPair(skew, Partition(counts))


def lm_rho(lam, ell):
    """Left-justify, row by row, the boxes with hook length below ``ell``."""
    return lm_pair(lam, ell).bounded


def upsilon(nu):
    """Delete the first column."""
    return Partition(p - 1 for p in as_partition(nu))


def phi_transposed(lam, ell):
    return transpose(phi(transpose(lam), ell))


def lm_deleted_boxes(lam, ell):
    """Boxes with hook below ``ell`` in the columns that the transposed bijection deletes.

    Those columns are the ones whose top hook is congruent to the corner hook.
    """
    lam = as_partition(lam)
    _require_core(lam, ell)
    if not lam:
        return []
    table = hook_table(lam)
    top = table[0]
    return [
        (r, c)
        for r, row in enumerate(table, 1)
        for c, h in enumerate(row, 1)
        if h < ell and (top[c - 1] - top[0]) % ell == 0
    ]


def verify_lm_diagram(lam, ell):
    lam = as_partition(lam)
    _require_core(lam, ell)
    require_modulus(ell, 3)
    return lm_rho(phi_transposed(lam, ell), ell - 1) == upsilon(lm_rho(lam, ell))
