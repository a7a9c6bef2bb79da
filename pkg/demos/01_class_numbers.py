"""
Class numbers of imaginary quadratic fields, two ways
=====================================================

"""

import numpy as np

from iwacert import quadratic as qd

# The reduced forms of discriminant -47. Five of them, so h = 5.
for form in qd.reduced_forms(-47):
    print(form)

# The analytic side sums the Kronecker character over a period.
print(qd.class_number_forms(-47), qd.class_number_dirichlet(-47))

# A small table. class_number() cross-checks both methods and raises
# ConsistencyError if they ever disagree.
discs = np.array(list(qd.fundamental_discriminants(-200)))
hs = np.array([qd.class_number(int(d)) for d in discs])
print("discriminants with h = 1:", discs[hs == 1])
print("largest h below |D| = 200:", hs.max(), "at D =", discs[hs.argmax()])

# Genus theory: one ramified prime forces h to be odd.
prime_discs = [int(d) for d in discs if qd.genus_parity_check(int(d))]
print(all(qd.class_number(d) % 2 == 1 for d in prime_discs))
