"""Young diagrams, hooks and the abacus.

Builds a partition, prints its hook lengths, then places its first-column
hooks on a 4-runner abacus to see why (5,2,1,1,1) is a 4-core.
"""

from corecrystal.abacus import is_core, n_vector, render_abacus, to_root_vector
from corecrystal.partition import hook_table, parse_partition

lam = parse_partition("5,2,1^3")
print("partition:", lam)
for row in hook_table(lam):
    print("  ", " ".join(f"{h:2d}" for h in row))

# Beads sit flush on every runner, so no 4-rim hook can be slid off.
print(render_abacus(lam, 4))
print("4-core?", is_core(lam, 4))

# Flush abaci are points of the type A root lattice; the n-vector reads the
# same coordinates straight off the diagram.
print("root vector:", to_root_vector(lam, 4))
print("n-vector:   ", n_vector(lam, 4))
