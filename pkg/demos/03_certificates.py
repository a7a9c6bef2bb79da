"""
Certificates and what verify() checks
=====================================

"""

import copy
from dataclasses import replace

from iwacert import certify_nonzero_pseudonull, to_text, verify

cert = next(certify_nonzero_pseudonull(3, 100))
print(to_text(cert))
print(verify(cert))

# Witnesses are recomputed, never trusted. Nudge the class number:
bad = copy.deepcopy(cert)
bad.claims[0].witnesses["h_F"] += 1
print(verify(bad))

# Swap in a prime that fails one of the ell conditions:
bad = copy.deepcopy(cert)
bad.field = replace(bad.field, ell=61)
print(verify(bad))

# The p = 2 family: imaginary quadratic fields Q(sqrt(-q)), q = 15 mod 16.
for c in certify_nonzero_pseudonull(2, 250):
    nz = c.claims[-1]
    print(-c.field.disc_f, nz.witnesses["lambda_k_lower_bound"], nz.witnesses["surjection_rank"])
