"""One bijection, four ways.

Maps a 4-core with first part 8 to a 3-core through the abacus, the diagram,
root-lattice coordinates and reduced words, then inverts it.
"""

from corecrystal.abacus import from_root_vector, to_root_vector
from corecrystal.corebij import (
    canonical_word,
    coxeter_length,
    phi,
    phi_geometric,
    phi_inverse,
    phi_rows,
    phi_subexpression,
    verify_lm_diagram,
)

lam, ell = (8, 5, 2, 2, 1, 1, 1), 4
print("abacus runner removed:", phi(lam, ell))
print("rows deleted:         ", phi_rows(lam, ell))
print("root lattice:         ", from_root_vector(phi_geometric(to_root_vector(lam, ell))))

sub = phi_subexpression(lam, ell)
print("word:", canonical_word(lam, ell), "kept letters at", sub.kept_positions, "->", sub.relabelled)
print("length drop:", coxeter_length(lam, ell) - coxeter_length(phi(lam, ell), ell - 1), "= first part", lam[0])

print("inverse:", phi_inverse((2, 1, 1), ell, 8))
print("bounded-partition square commutes:", verify_lm_diagram((6, 4, 3, 3, 2, 1, 1), 5))
