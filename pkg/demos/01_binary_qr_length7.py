#!/usr/bin/env python3
# QR codes of length 7 over F_2 + vF_2 and the weights of their extension.

from qrfpv import enumerate_weights, extend, gray_image_code, qr_family

F = qr_family(2, 7)
print("residues mod 7:", sorted(F.Qset))

# four idempotent generators, written coefficient by coefficient
for w in ("Q1", "Q2", "Q1p", "Q2p"):
    print(f"{w:<4}", F.idempotent(w), " size", F.code(w).cardinality)

# the extension adds one coordinate (index 0) and is self-dual
E = extend(F, "Q1")
print("extended code:", E, "self-dual:", E.is_self_dual())

for kind in ("lee", "hamming", "bachoc"):
    print(f"{kind:<8}", enumerate_weights(E, kind).to_poly_string())

# Lee weights upstairs are Hamming weights of the binary image
G = gray_image_code(E)
print("binary image:", G.n, "x", G.card_exponent, "self-dual:", G == G.dual())
