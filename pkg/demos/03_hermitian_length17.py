#!/usr/bin/env python3
# Hermitian self-dual codes of lengths 17 and 18 over F_2 + vF_2.

from qrfpv import bachoc_extremality, enumerate_weights, extend, hermitian_augment, qr_family

F = qr_family(2, 17)

# adding the all-v (or all-(1+v)) word to Q1' gives a Hermitian self-dual code
for unit in ("v", "1+v"):
    C = hermitian_augment(F, "Q1p", unit)
    print(f"Q1' + <{unit}>: Hermitian self-dual = {C.is_hermitian_self_dual()}")

C = hermitian_augment(F, "Q1p", "v")
print("Bachoc weights:", enumerate_weights(C, "bachoc").to_poly_string())

E = extend(F, "Q1")
rep = bachoc_extremality(E)
print(f"extended: d_B={rep.d_B}, bound={rep.bound}, extremal={rep.is_extremal}, even={rep.is_even}")
print("Bachoc weights:", enumerate_weights(E, "bachoc").to_poly_string())
