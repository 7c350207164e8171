"""Classical and ladder crystals of the basic representation.

Walks an i-string with each operator and prints the first levels of both
graphs; regularization carries one onto the other.
"""

from corecrystal.crystal import CLASSICAL, LADDER, apply_power, classical_signature, f_hat, generate, reduce
from corecrystal.partition import Partition
from corecrystal.regular import regularize

sig = classical_signature((8, 5, 4, 1), 3, 1)
print("1-signature of (8,5,4,1):", sig.signs, "reduced:", reduce(sig).signs)

lam = Partition((5, 3, 1, 1, 1, 1, 1))
for k in range(6):
    print(f"f_hat_2^{k}:", apply_power(f_hat, lam, 3, 2, k) or "none")

classical, ladder = generate(CLASSICAL, 3, 5), generate(LADDER, 3, 5)
for n, (top, bottom) in enumerate(zip(classical.levels, ladder.levels)):
    print(f"level {n}: ladder {[tuple(x) for x in bottom]}")
    assert sorted(regularize(mu, 3) for mu in bottom) == top
print("edges leaving each level:", classical.edge_counts()[:-1], ladder.edge_counts()[:-1])
