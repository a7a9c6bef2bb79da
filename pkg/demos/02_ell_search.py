"""
Searching for the auxiliary prime ell
=====================================

For p = 3 and F = Q(sqrt(-47)) we want ell = 1 mod 3 that is inert in F,
stays inert in the first layer of the cyclotomic Z_3-extension, and has
3 as a cube mod ell.
"""

from itertools import islice

from iwacert.quadratic import quad_field_from_disc
from iwacert.tower import EllWitness, choose_base_field, find_ell

F = quad_field_from_disc(-47)

# 61 is 1 mod 3 and 3 is a cube mod 61, but 61 splits in F.
print(EllWitness.compute(3, 61, -47).failures())

# The first few admissible primes with their recorded residues.
for w in islice(find_ell(3, F), 5):
    print(w.ell, w.cond1_symbol, w.cond2_residue, w.cond3_residue)

# The base field for larger p comes from Q(sqrt(1 - p)) or Q(sqrt(4 - p)).
for p in (5, 7, 11, 13):
    F, note = choose_base_field(p)
    w = next(find_ell(p, F))
    print(p, F.disc, w.ell, "-", note)
