"""Crystal operators on partitions, in the classical and the ladder reading order.

Both variants share the same signature machinery: addable ``i``-boxes are
written ``+``, removable ones ``-``, adjacent ``-+`` pairs cancel, and the
operators act on the surviving rightmost ``+`` (adding) or leftmost ``-``
(removing). The variants differ only in the order the boxes are read.
"""

from collections import defaultdict
from dataclasses import dataclass, field

from .errors import DomainError, require_modulus
from .partition import (
    Partition,
    add_box,
    addable_boxes,
    as_partition,
    remove_box,
    removable_boxes,
)

CLASSICAL, LADDER = "classical", "ladder"


class SignedWord(tuple):
    """Tuple of ``(sign, box)`` pairs with ``sign`` in ``"+"`` / ``"-"``."""

    __slots__ = ()

    @property
    def signs(self):
        return "".join(s for s, _ in self)

    def __str__(self):
        return self.signs


def reduce(word):
    """Cancel ``-+`` pairs until none remain; the result reads ``+...+-...-``."""
    stack = []
    for entry in word:
        if entry[0] == "+" and stack and stack[-1][0] == "-":
            stack.pop()
        else:
            stack.append(entry)
    return SignedWord(stack)


def reduce_by_rescanning(word):
    """Reference reduction by repeated scanning, used to cross-check ``reduce``."""
    word = list(word)
    while True:
        for j in range(len(word) - 1):
            if word[j][0] == "-" and word[j + 1][0] == "+":
                del word[j:j + 2]
                break
        else:
            return SignedWord(word)


def _signed_boxes(lam, ell, i):
    return [("+", b) for b in addable_boxes(lam, ell, i)] + [("-", b) for b in removable_boxes(lam, ell, i)]


def classical_signature(lam, ell, i):
    """``i``-signature read from the bottom row up."""
    require_modulus(ell)
    entries = _signed_boxes(as_partition(lam), ell, i)
    return SignedWord(sorted(entries, key=lambda e: -e[1].row))


def ladder_of(box, ell):
    """Row at which the box's ladder meets column 1."""
    require_modulus(ell, 3)
    return box[0] + (box[1] - 1) * (ell - 1)


def ladder_positions(k, ell):
    """All positions on ladder ``k``, top first (the bottom one is ``(k, 1)``)."""
    steps = (k - 1) // (ell - 1)
    return [(k - (ell - 1) * j, 1 + j) for j in range(steps, -1, -1)]


def ladder_signature(lam, ell, i):
    """``i``-signature read ladder by ladder from the left, top to bottom within each ladder."""
    require_modulus(ell, 3)
    entries = _signed_boxes(as_partition(lam), ell, i)
    return SignedWord(sorted(entries, key=lambda e: (ladder_of(e[1], ell), e[1].row)))


def _signature(lam, ell, i, variant):
    if variant == CLASSICAL:
        return classical_signature(lam, ell, i)
    if variant == LADDER:
        return ladder_signature(lam, ell, i)
    raise DomainError(f"unknown crystal variant {variant!r}")


def _check_residue(ell, i):
    if not 0 <= i < ell:
        raise DomainError(f"residue {i} is outside 0..{ell - 1}")


def _f(lam, ell, i, variant):
    _check_residue(ell, i)
    reduced = reduce(_signature(lam, ell, i, variant))
    plus = [b for s, b in reduced if s == "+"]
    return add_box(lam, plus[-1]) if plus else None


def _e(lam, ell, i, variant):
    _check_residue(ell, i)
    reduced = reduce(_signature(lam, ell, i, variant))
    minus = [b for s, b in reduced if s == "-"]
    return remove_box(lam, minus[0]) if minus else None


def _count(lam, ell, i, variant, sign):
    _check_residue(ell, i)
    return reduced_signs(lam, ell, i, variant).count(sign)


def reduced_signs(lam, ell, i, variant=CLASSICAL):
    return reduce(_signature(lam, ell, i, variant)).signs


def f_tilde(lam, ell, i):
    return _f(as_partition(lam), ell, i, CLASSICAL)


def e_tilde(lam, ell, i):
    return _e(as_partition(lam), ell, i, CLASSICAL)


def phi(lam, ell, i):
    """Number of conormal ``i``-boxes: how often ``f_tilde`` applies."""
    return _count(as_partition(lam), ell, i, CLASSICAL, "+")


def eps(lam, ell, i):
    """Number of normal ``i``-boxes: how often ``e_tilde`` applies."""
    return _count(as_partition(lam), ell, i, CLASSICAL, "-")


def f_hat(lam, ell, i):
    return _f(as_partition(lam), ell, i, LADDER)


def e_hat(lam, ell, i):
    return _e(as_partition(lam), ell, i, LADDER)


def phi_hat(lam, ell, i):
    return _count(as_partition(lam), ell, i, LADDER, "+")


def eps_hat(lam, ell, i):
    return _count(as_partition(lam), ell, i, LADDER, "-")


def apply_power(operator, lam, ell, i, times):
    """Apply ``operator`` ``times`` times; ``None`` once it falls off the string."""
    for _ in range(times):
        if lam is None:
            return None
        lam = operator(lam, ell, i)
    return lam


def weyl_si(lam, ell, i):
    """Reflect ``lam`` across the middle of its ``i``-string."""
    lam = as_partition(lam)
    up, down = phi(lam, ell, i), eps(lam, ell, i)
    if up > down:
        return apply_power(f_tilde, lam, ell, i, up - down)
    if down > up:
        return apply_power(e_tilde, lam, ell, i, down - up)
    return lam


@dataclass
class CrystalGraph:
    variant: str
    ell: int
    max_level: int
    levels: list = field(default_factory=list)
    edges: list = field(default_factory=list)

    @property
    def nodes(self):
        return [lam for level in self.levels for lam in level]

    def node_index(self):
        return {lam: j for j, lam in enumerate(self.nodes)}

    def edge_counts(self):
        counts = defaultdict(int)
        for src, _, _ in self.edges:
            counts[src.size] += 1
        return [counts[n] for n in range(self.max_level + 1)]


def generate(variant, ell, max_level):
    """Every node reachable from the empty partition with at most ``max_level`` boxes.

    Levels are sorted lexicographically; edges ``(source, target, i)`` record
    ``target = f_i(source)`` for the variant's ``f``.
    """
    if variant == LADDER:
        require_modulus(ell, 3)
    elif variant == CLASSICAL:
        require_modulus(ell)
    else:
        raise DomainError(f"unknown crystal variant {variant!r}")
    if max_level < 0:
        raise DomainError("level count must be non-negative")
    graph = CrystalGraph(variant, ell, max_level, [[Partition()]])
    for _ in range(max_level):
        found = set()
        for lam in graph.levels[-1]:
            for i in range(ell):
                mu = _f(lam, ell, i, variant)
                if mu is not None:
                    found.add(mu)
                    graph.edges.append((lam, mu, i))
        graph.levels.append(sorted(found))
    return graph
