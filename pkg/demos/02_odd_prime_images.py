#!/usr/bin/env python3
# Self-dual and formally self-dual codes over F_3 and F_5 as Gray images.

from qrfpv import extend, formally_self_dual, gray_image_code, min_distance, qr_family
from qrfpv.tables import gray_duality

for p, q in [(3, 11), (3, 13), (5, 19)]:
    F = qr_family(p, q)
    E = extend(F, "Q1")
    small = min_distance(F.code("Q1"), "lee")
    big = min_distance(E, "lee")
    G = gray_image_code(E)
    print(f"p={p} q={q}: QR {small}, extended {big}")
    print(f"   image [{G.n},{G.card_exponent}] over F_{p}: {gray_duality(F)}")

# q = 1 mod 4: the image is not self-dual, but its dual has the same weights
E = extend(qr_family(3, 13), "Q1")
print("formally self-dual:", formally_self_dual(E))
