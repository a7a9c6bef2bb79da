"""
Non-free pro-p groups and JSON round trips
==========================================

"""

from iwacert import certify_nonfree, loads, to_json_line, verify
from iwacert.quadratic import class_number

certs = list(certify_nonfree(2, 300))
for c in certs:
    q = -c.field.disc_f
    print(q, q % 32, class_number(-q), c.subjects)

# Integers travel as decimal strings; the round trip is exact.
line = to_json_line(certs[0])
print(line[:120], "...")
(back,) = loads(line)
print(back == certs[0], verify(back))

# Odd p uses the composite field of degree 2p.
c3 = next(certify_nonfree(3, 100))
print(c3.field, [cl.rule_ids for cl in c3.claims])
