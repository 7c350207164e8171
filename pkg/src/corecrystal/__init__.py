"""Partitions modulo ``ell``: cores, rim hooks, crystals, ladders and the core bijection."""

from .errors import DomainError
from .partition import Box, Partition, parse_partition

__all__ = ["Box", "DomainError", "Partition", "parse_partition"]
__version__ = "0.1.0"
