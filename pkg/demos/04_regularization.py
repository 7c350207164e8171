"""Sliding boxes along ladders.

R pushes boxes up their ladders, S pushes the unlocked ones down. The lock
picture shows which boxes S may move.
"""

from corecrystal.partition import count_standard_tableaux
from corecrystal.regular import deregularize, regularization_class, regularize, render_locks

lam = (6, 5, 4, 3, 1, 1)
print(render_locks(lam, 3))
print("S:", deregularize(lam, 3))
print("R:", regularize(lam, 3))

members = regularization_class((2, 2, 2, 1, 1, 1), 3)
print("class of (2,2,2,1,1,1):", [tuple(m) for m in members])

lam = (3, 2, 1)
low, high = deregularize(lam, 3), regularize(lam, 3)
print(f"tableaux: S-image {low} has {count_standard_tableaux(low)}, R-image {high} has {count_standard_tableaux(high)}")
