#!/usr/bin/env python3
# Machine checks of the structure of a QR family, and what a bug looks like.

import dataclasses

from qrfpv import RingPoly, qr_family, verify_qr_theorems

print(verify_qr_theorems(5, 29).to_text())

# flip one coefficient of one idempotent and check again
F = qr_family(3, 11)
f = F.idem_Q1
s = f.s.copy()
s[1] = (s[1] + 1) % 3
broken = dataclasses.replace(F, idem_Q1=RingPoly(s, f.t, 3))
rep = verify_qr_theorems(3, 11, broken)
for item in rep.failures():
    print(item.id, "->", item.detail, "| witness:", item.witness)
