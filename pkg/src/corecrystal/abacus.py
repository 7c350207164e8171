"""Beta-sets, abacus diagrams, balance numbers and the root-lattice coordinates of cores.

A ``BetaSet`` lists finitely many bead positions explicitly and treats every
integer below ``charge`` as a bead as well, so runners are never empty and the
level of the top bead on each runner is always defined. The canonical
``N``-bead set of a partition has ``charge = 0`` and positions
``lam_i + N - i``.
"""

from dataclasses import dataclass

from .errors import DomainError, NonzeroSum, NotACore, require_modulus
from .partition import Partition, as_partition, hook_table


@dataclass(frozen=True)
class BetaSet:
    positions: tuple
    charge: int = 0

    def __post_init__(self):
        pos = tuple(int(p) for p in self.positions)
        if any(a <= b for a, b in zip(pos, pos[1:])):
            raise DomainError("bead positions must be strictly decreasing")
        if pos and pos[-1] < self.charge:
            raise DomainError("explicit beads must sit at or above the charge")
        object.__setattr__(self, "positions", pos)

    @property
    def bead_count(self):
        return len(self.positions)

    def is_bead(self, x):
        return x < self.charge or x in self.positions

    def shifted(self, amount):
        """Add ``amount`` to every bead, the tail included."""
        return BetaSet(tuple(p + amount for p in self.positions), self.charge + amount)

    def partition(self):
        n = len(self.positions)
        return Partition(b - self.charge - n + j for j, b in enumerate(self.positions, 1))


def beta_set(lam, bead_count=None):
    """Canonical beta-set ``lam_i + N - i`` with ``N`` beads (default ``len(lam)``)."""
    lam = as_partition(lam)
    n = len(lam) if bead_count is None else bead_count
    if n < len(lam):
        raise DomainError(f"{n} beads cannot encode a partition with {len(lam)} parts")
    return BetaSet(tuple(lam.part(i) + n - i for i in range(1, n + 1)))


@dataclass(frozen=True)
class Abacus:
    ell: int
    beads: BetaSet

    def __post_init__(self):
        require_modulus(self.ell)

    def runner_top(self, runner):
        """Level of the largest bead on ``runner``; entry ``r*ell + runner`` has level ``r``."""
        on_runner = [p for p in self.beads.positions if p % self.ell == runner]
        if on_runner:
            return on_runner[0] // self.ell
        # Largest tail bead on this runner.
        c = self.beads.charge
        return (c - 1 - ((c - 1 - runner) % self.ell)) // self.ell

    def levels(self):
        return tuple(self.runner_top(i) for i in range(self.ell))

    def partition(self):
        return self.beads.partition()


def abacus_of(lam, ell, bead_count=None):
    return Abacus(ell, beta_set(lam, bead_count))


def partition_from_abacus(abacus):
    """Read a partition by counting the gaps before each bead."""
    return abacus.partition()


def balance_number(abacus):
    return sum(abacus.levels())


def is_flush(abacus):
    """No gap precedes a bead on any runner."""
    return all(abacus.beads.is_bead(p - abacus.ell) for p in abacus.beads.positions)


def is_core(lam, ell):
    require_modulus(ell)
    return is_flush(abacus_of(lam, ell))


def is_core_by_hooks(lam, ell):
    return all(h % ell for row in hook_table(lam) for h in row)


def _require_core(lam, ell):
    if not is_core(lam, ell):
        raise NotACore(f"{tuple(lam)} is not a {ell}-core")


def balanced_abacus(lam, ell):
    """The abacus of ``lam`` whose balance number is zero."""
    ab = abacus_of(lam, ell)
    return Abacus(ell, ab.beads.shifted(-balance_number(ab)))


def to_root_vector(lam, ell):
    """Top-bead levels of the balanced flush abacus, runner 0 first."""
    lam = as_partition(lam)
    _require_core(lam, ell)
    levels = balanced_abacus(lam, ell).levels()
    assert sum(levels) == 0
    return levels


def from_root_vector(vector, ell=None):
    """The core whose balanced flush abacus has the given top-bead levels."""
    vector = tuple(int(a) for a in vector)
    ell = len(vector) if ell is None else ell
    require_modulus(ell)
    if len(vector) != ell:
        raise DomainError(f"expected {ell} coordinates, got {len(vector)}")
    if sum(vector) != 0:
        raise NonzeroSum(f"coordinates of {vector} do not sum to zero")
    floor = min(vector)
    charge = ell * (floor + 1)
    positions = sorted(
        (level * ell + runner for runner, top in enumerate(vector) for level in range(floor + 1, top + 1)),
        reverse=True,
    )
    return BetaSet(tuple(positions), charge).partition()


def region(box, ell):
    require_modulus(ell)
    return (box[1] - box[0]) // ell + 1


def n_vector(lam, ell):
    """Per residue, the largest region holding a row-exposed box of that residue.

    Rows past the end of ``lam`` contribute their column-0 boundary box; ``ell``
    padding rows reach every residue, and deeper rows only lower the region.
    """
    lam = as_partition(lam)
    _require_core(lam, ell)
    best = [None] * ell
    for row in range(1, len(lam) + ell + 1):
        col = lam.part(row)
        res, reg = (col - row) % ell, (col - row) // ell + 1
        if best[res] is None or reg > best[res]:
            best[res] = reg
    return tuple(best)


def render_abacus(lam, ell):
    """Text picture: one line per level, beads as ``(x)`` and gaps as `` x ``."""
    lam = as_partition(lam)
    n = -(-len(lam) // ell) * ell
    beads = beta_set(lam, n)
    top = max(beads.positions, default=-1)
    lines = []
    width = len(str(max(top, ell - 1))) + 1
    for level in range(-1, top // ell + 1):
        cells = []
        for runner in range(ell):
            x = level * ell + runner
            label = str(x).rjust(width)
            cells.append(f"({label})" if beads.is_bead(x) else f" {label} ")
        lines.append(" ".join(cells))
    return "\n".join(lines)


def abacus_json(lam, ell):
    lam = as_partition(lam)
    n = -(-len(lam) // ell) * ell
    return {"l": ell, "beads": list(beta_set(lam, n).positions)}
