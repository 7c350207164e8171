"""Exact counts of cores and irreducible-Specht shapes, with truncated power series.

All arithmetic is on Python integers; nothing here touches floating point.
"""

from functools import lru_cache
from itertools import product
from math import comb

from .abacus import from_root_vector, is_core
from .corebij import first_part_from_vector
from .errors import DomainError, NotACore, require_modulus
from .partition import as_partition, transpose
from .rimhook import EllDecomposition, _leading_steps, compose_ell


class IntSeries:
    """Power series with integer coefficients, truncated after degree ``order``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order):
        if order < 0:
            raise DomainError("truncation order must be non-negative")
        coeffs = [int(c) for c in list(coeffs)[: order + 1]]
        self.coeffs = coeffs + [0] * (order + 1 - len(coeffs))
        self.order = order

    @classmethod
    def polynomial(cls, terms, order):
        """Build from a ``{degree: coefficient}`` mapping."""
        coeffs = [0] * (order + 1)
        for degree, c in terms.items():
            if degree <= order:
                coeffs[degree] += c
        return cls(coeffs, order)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, IntSeries) and self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        return f"IntSeries({self.coeffs}, {self.order})"

    def _match(self, other):
        if self.order != other.order:
            raise DomainError("series truncated at different orders")

    def __add__(self, other):
        self._match(other)
        return IntSeries([a + b for a, b in zip(self, other)], self.order)

    def __sub__(self, other):
        self._match(other)
        return IntSeries([a - b for a, b in zip(self, other)], self.order)

    def __mul__(self, other):
        self._match(other)
        out = [0] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(self.order + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return IntSeries(out, self.order)

    def __pow__(self, n):
        result = IntSeries([1], self.order)
        for _ in range(n):
            result = result * self
        return result

    def reciprocal(self):
        """Inverse of a series whose constant term is 1 or -1."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise DomainError("only series with unit constant term are invertible over the integers")
        inv = [0] * (self.order + 1)
        inv[0] = c0
        for k in range(1, self.order + 1):
            inv[k] = -c0 * sum(self.coeffs[j] * inv[k - j] for j in range(1, k + 1))
        return IntSeries(inv, self.order)


def core_count(ell, k):
    """Number of ``ell``-cores with first part exactly ``k``."""
    require_modulus(ell)
    if k < 0:
        raise DomainError("k must be non-negative")
    return comb(k + ell - 2, k)


def core_gf(ell, order):
    """Series ``1 / (1 - x)^(ell - 1)``."""
    require_modulus(ell)
    one_minus_x = IntSeries.polynomial({0: 1, 1: -1}, order)
    return (one_minus_x ** (ell - 1)).reciprocal()


def lpartition_gf(ell, order):
    """Series ``(1 - x^(ell-1)) / ((1 - x)^(ell-1) (1 - x^(ell-1) - x^ell))``."""
    require_modulus(ell)
    numerator = IntSeries.polynomial({0: 1, ell - 1: -1}, order)
    stair = IntSeries.polynomial({0: 1, ell - 1: -1, ell: -1}, order)
    return numerator * core_gf(ell, order) * stair.reciprocal()


def stair_sum_series(ell, order):
    """``sum_r x^(r(ell-1)) / (1 - x^ell)^(r+1)`` summed term by term up to ``order``."""
    total = IntSeries([0], order)
    hook = IntSeries.polynomial({0: 1, ell: -1}, order).reciprocal()
    r = 0
    while r * (ell - 1) <= order:
        shift = IntSeries.polynomial({r * (ell - 1): 1}, order)
        total = total + shift * hook ** (r + 1)
        r += 1
    return total


@lru_cache(maxsize=None)
def partitions_at_most(n, parts):
    """Number of partitions of ``n`` with at most ``parts`` parts."""
    if n == 0:
        return 1
    if n < 0 or parts <= 0:
        return 0
    # Either fewer than ``parts`` parts, or subtract 1 from each of exactly ``parts`` parts.
    return partitions_at_most(n, parts - 1) + partitions_at_most(n - parts, parts)


def pair_count(w, first_len, second_len):
    """Pairs of partitions with bounded lengths and total size ``w``."""
    return sum(partitions_at_most(j, first_len) * partitions_at_most(w - j, second_len) for j in range(w + 1))


def partitions_in_box(rows, cols):
    """Partitions fitting inside a ``rows`` by ``cols`` rectangle."""
    return comb(rows + cols, rows)


def _require_core(nu, ell):
    if not is_core(nu, ell):
        raise NotACore(f"{tuple(nu)} is not a {ell}-core")


def stair_counts(nu, ell):
    """Leading row steps and leading column steps of size ``ell - 1`` in a core."""
    nu = as_partition(nu)
    return _leading_steps(nu, ell - 1), _leading_steps(transpose(nu), ell - 1)


def count_lpartitions_core_weight(nu, ell, w):
    """Partitions of ``w`` into at most ``r + 1`` parts, ``r`` the leading row steps of ``nu``."""
    nu = as_partition(nu)
    require_modulus(ell)
    _require_core(nu, ell)
    rows, _ = stair_counts(nu, ell)
    return partitions_at_most(w, rows + 1)


def count_jm_core_weight(nu, ell, w):
    """JM partitions with core ``nu`` and weight ``w``, counted through hook-partition pairs.

    When the core left after peeling the stairs is non-empty the row and column
    hook partitions are independent. When it is empty, the two families (last
    row hook zero, or last column hook zero) overlap and the overlap is counted
    once.
    """
    nu = as_partition(nu)
    require_modulus(ell, 3)
    _require_core(nu, ell)
    rows, cols = stair_counts(nu, ell)
    if nu.part(rows + 1) > cols:
        return pair_count(w, rows + 1, cols + 1)
    return pair_count(w, rows + 1, cols) + pair_count(w, rows, cols + 1) - pair_count(w, rows, cols)


def cores_with_first_part(ell, k):
    """All ``ell``-cores with first part ``k``, read off their root-lattice coordinates."""
    require_modulus(ell)
    if k == 0:
        return [from_root_vector((0,) * ell)]
    top, index = -(-k // ell), (k - 1) % ell
    low = -top * (ell - 1)
    found = []
    others = [j for j in range(ell) if j != index]
    for values in product(range(low, top + 1), repeat=ell - 1):
        vector = [0] * ell
        vector[index] = top
        for j, v in zip(others, values):
            if j > index and v >= top:
                break
            vector[j] = v
        else:
            if sum(vector) == 0:
                assert first_part_from_vector(vector) == k
                found.append(from_root_vector(vector))
    return sorted(found)


def _bounded_partitions(first, max_len):
    """Partitions with first part exactly ``first`` and at most ``max_len`` parts."""
    if first == 0:
        yield ()
        return
    if max_len == 0:
        return

    def rec(cap, slots):
        yield ()
        if slots == 0:
            return
        for p in range(cap, 0, -1):
            for rest in rec(p, slots - 1):
                yield (p,) + rest

    for rest in rec(first, max_len - 1):
        yield (first,) + rest


def ell_partitions_with_first_part(ell, k):
    """All ``ell``-partitions with first part ``k``, built from their decompositions."""
    require_modulus(ell)
    found = set()
    r = 0
    while r * (ell - 1) <= k:
        for hooks_first in range((k - r * (ell - 1)) // ell + 1):
            inner_first = k - r * (ell - 1) - ell * hooks_first
            for inner in cores_with_first_part(ell, inner_first):
                if inner.part(1) - inner.part(2) == ell - 1:
                    continue
                for hooks in _bounded_partitions(hooks_first, r + 1):
                    found.add(compose_ell(EllDecomposition(inner, r, hooks), ell))
        r += 1
    return sorted(found)
