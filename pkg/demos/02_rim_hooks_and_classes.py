"""Rim hooks and the families of partitions they define.

Removes 3-rim hooks from a few shapes, then sorts small partitions into the
Carter, l-partition, JM and ladder-node classes.
"""

from corecrystal.partition import enumerate_partitions, is_regular
from corecrystal.rimhook import (
    core_and_weight,
    decompose_ell,
    is_carter,
    is_ell_partition,
    is_jm,
    is_ladder_node,
    removable_rim_hooks,
)

for lam in [(4, 1, 1, 1), (3, 2, 1), (12, 1)]:
    hooks = removable_rim_hooks(lam, 3)
    print(lam, "->", [(h.kind, sorted(tuple(b) for b in h.boxes)) for h in hooks])
    core, weight = core_and_weight(lam, 3)
    print(f"   core {core or 'empty'}, weight {weight}")

# On 3-regular partitions the hook-divisibility test and the recursive
# definition pick out exactly the same shapes.
ell = 3
for n in range(1, 9):
    regular = [lam for lam in enumerate_partitions(n) if is_regular(lam, ell)]
    ell_parts = [lam for lam in regular if is_ell_partition(lam, ell)]
    assert ell_parts == [lam for lam in regular if is_carter(lam, ell)]
    jm = [lam for lam in enumerate_partitions(n) if is_jm(lam, ell)]
    nodes = [lam for lam in enumerate_partitions(n) if is_ladder_node(lam, ell)]
    print(f"n={n}: {len(ell_parts)} 3-partitions, {len(jm)} JM, {len(nodes)} ladder nodes")

print("(9,4,2,1,1) decomposes as", tuple(decompose_ell((9, 4, 2, 1, 1), 3)))
