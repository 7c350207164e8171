"""Generating functions, checked by listing.

Prints series coefficients next to brute-force counts.
"""

from corecrystal.counting import (
    cores_with_first_part,
    count_jm_core_weight,
    count_lpartitions_core_weight,
    ell_partitions_with_first_part,
    lpartition_gf,
)

series = lpartition_gf(3, 8)
for k in range(9):
    listed = len(ell_partitions_with_first_part(3, k))
    print(f"k={k}: 3-cores {len(cores_with_first_part(3, k))}, 3-partitions {series[k]} (listed {listed})")

print("3-partitions with core (6,4,2,1,1) and weight 5:", count_lpartitions_core_weight((6, 4, 2, 1, 1), 3, 5))
print("JM partitions with core (3,1) and weight 3:", count_jm_core_weight((3, 1), 3, 3))
