"""Machine checks of the structural statements about QR codes over F_p + vF_p.

Every item is decided at the level of codes (canonical forms compared for
equality), never by matching idempotent formulas, and every item runs even
when an earlier one fails.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .analysis import bachoc_bound, enumerate_weights, infoset_distance
from .analysis.enumeration import DEFAULT_BUDGET
from .arith import RingElement, crt_join
from .cyclic_ring import (
    RingPoly,
    fp_mul,
    is_idempotent,
    poly_mul,
    poly_mul_S,
    psi_inverse,
    psi_transform,
)
from .errors import BudgetExceededError, DomainError, NotQRSettingError, UnsupportedError
from .gray_weights import WeightKind, gray, gray_image_code, weight_table
from .linear_code import LinearCode
from .qr_construct import (
    CODES,
    QRFamily,
    extend,
    extension_constant,
    hermitian_augment,
    hermitian_augment_idempotent,
    qr_family,
)


@dataclass
class TheoremItem:
    id: str
    statement: str
    passed: bool
    detail: str = ""
    witness: object = None

    def to_dict(self) -> dict:
        out = {"id": self.id, "statement": self.statement, "pass": self.passed, "detail": self.detail}
        if self.witness is not None:
            out["witness"] = _witness_json(self.witness)
        return out


@dataclass
class TheoremReport:
    instance: dict
    items: list[TheoremItem] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(it.passed for it in self.items)

    def failures(self) -> list[TheoremItem]:
        return [it for it in self.items if not it.passed]

    def to_dict(self) -> dict:
        return {"instance": self.instance, "pass": self.passed, "items": [it.to_dict() for it in self.items]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        head = ", ".join(f"{k}={v}" for k, v in self.instance.items())
        width = max((len(it.id) for it in self.items), default=4)
        lines = [f"# {head}"]
        for it in self.items:
            mark = "PASS" if it.passed else "FAIL"
            lines.append(f"{it.id:<{width}}  {mark}  {it.statement}")
            if it.detail:
                lines.append(f"{'':<{width}}        {it.detail}")
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _witness_json(w):
    if isinstance(w, RingPoly):
        return str(w)
    if isinstance(w, np.ndarray):
        return w.tolist()
    return w


class _Checker:
    def __init__(self, report: TheoremReport):
        self.report = report

    def add(self, item_id: str, statement: str, fn: Callable[[], tuple]):
        try:
            ok, detail, witness = fn()
        except Exception as exc:  # an item crashing is a failure of that item only
            ok, detail, witness = False, f"{type(exc).__name__}: {exc}", None
        self.report.items.append(TheoremItem(item_id, statement, bool(ok), detail, witness))


def _equal(A: LinearCode, B: LinearCode):
    if A == B:
        return True, "", None
    w = A.witness_not_in(B)
    side = "left not in right"
    if w is None:
        w = B.witness_not_in(A)
        side = "right not in left"
    return False, f"codes differ ({side}); sizes p^{A.card_exponent} vs p^{B.card_exponent}", w


def _size(C: LinearCode, exponent: int):
    if C.card_exponent == exponent:
        return True, "", None
    return False, f"size mismatch: p^{C.card_exponent}, expected p^{exponent}", None


def _all(*results):
    for ok, detail, w in results:
        if not ok:
            return ok, detail, w
    return True, "", None


def _h_code(F: QRFamily) -> LinearCode:
    return LinearCode.from_cyclic(F.h_ring())


def _idempotency(F: QRFamily):
    for w in CODES:
        f = F.idempotent(w)
        if not is_idempotent(f):
            return False, f"{w} generator is not idempotent (witness: f^2 - f)", poly_mul(f, f) - f
    return True, "", None


def verify_qr_theorems(p: int, q: int, family: QRFamily | None = None) -> TheoremReport:
    """Check the QR structure theorems, extension duality and Gray corollary for (p, q)."""
    F = family if family is not None else qr_family(p, q)
    p, q = F.p, F.q
    case3 = q % 4 == 3
    tag = "bQR" if case3 else "bQR41"
    report = TheoremReport({"p": p, "q": q, "q_mod4": q % 4})
    chk = _Checker(report)
    code = F.code
    nres = F.nonresidue

    chk.add("idem", "the four generators are idempotent", lambda: _idempotency(F))
    chk.add(f"{tag}.a", f"mu_{nres} maps Q1 to Q2 and Q1' to Q2'",
            lambda: _all(_equal(code("Q1").permute(nres), code("Q2")),
                         _equal(code("Q1p").permute(nres), code("Q2p"))))

    def item_b():
        ok, detail, w = _all(_equal(code("Q1").intersect(code("Q2")), _h_code(F)),
                             _equal(code("Q1") + code("Q2"), LinearCode.full(p, q)))
        ab = fp_mul(F.a, F.b, p)
        note = f"idempotent of Q1 n Q2 is {F.lam}*h" if np.array_equal(ab, (F.lam * F.h) % p) else "ab != q^-1 h"
        return ok, (detail + "; " if detail else "") + note, w

    chk.add(f"{tag}.b", "Q1 n Q2 = <h> and Q1 + Q2 = R^q", item_b)
    chk.add(f"{tag}.c", "|Q1| = |Q2| = p^(q+1)",
            lambda: _all(_size(code("Q1"), q + 1), _size(code("Q2"), q + 1)))
    chk.add(f"{tag}.d", "Q1 = Q1' + <h> and Q2 = Q2' + <h>",
            lambda: _all(_equal(code("Q1"), code("Q1p") + _h_code(F)),
                         _equal(code("Q2"), code("Q2p") + _h_code(F))))
    chk.add(f"{tag}.e", "|Q1'| = |Q2'| = p^(q-1)",
            lambda: _all(_size(code("Q1p"), q - 1), _size(code("Q2p"), q - 1)))
    if case3:
        def item_f():
            res = [_equal(code("Q1").dual(), code("Q1p")), _equal(code("Q2").dual(), code("Q2p"))]
            for w in ("Q1p", "Q2p"):
                C = code(w)
                if not C.is_self_orthogonal():
                    res.append((False, f"{w} is not self-orthogonal", C.witness_not_in(C.dual())))
            return _all(*res)

        chk.add(f"{tag}.f", "Q1' and Q2' are self-orthogonal, Q1^perp = Q1', Q2^perp = Q2'", item_f)
    else:
        chk.add(f"{tag}.f", "Q1^perp = Q2' and Q2^perp = Q1'",
                lambda: _all(_equal(code("Q1").dual(), code("Q2p")),
                             _equal(code("Q2").dual(), code("Q1p"))))
    chk.add(f"{tag}.g", "Q1' n Q2' = {0} and Q1' + Q2' = {x : sum x_i = 0}",
            lambda: _all(_equal(code("Q1p").intersect(code("Q2p")), LinearCode.zero(p, q)),
                         _equal(code("Q1p") + code("Q2p"), LinearCode.zero_sum(p, q))))

    def ext_pair():
        return extend(F, "Q1"), extend(F, "Q2")

    if case3:
        def item_43():
            E1, E2 = ext_pair()
            return _all(_equal(E1, E1.dual()), _equal(E2, E2.dual()))

        chk.add("ext.selfdual", "extended Q1 and Q2 are self-dual", item_43)
    else:
        def item_41():
            E1, E2 = ext_pair()
            return _all(_equal(E1.dual(), E2), _equal(E2.dual(), E1))

        chk.add("ext.duals", "dual of extended Q1 is extended Q2 and vice versa", item_41)

    def item_gray():
        E1, E2 = ext_pair()
        G1, G2 = gray_image_code(E1), gray_image_code(E2)
        res = [_size(G1, q + 1)]
        if case3:
            res += [_equal(G1, G1.dual()), _equal(G2, G2.dual())]
        else:
            # extended Q2 is a monomial image of extended Q1 (mu_n, then scale the new
            # column), and column scaling by a field unit keeps Lee weights
            g1, g2 = extension_constant(F, "Q1"), extension_constant(F, "Q2")
            perm = np.concatenate([[0], 1 + (nres * np.arange(q)) % q])
            moved = E1.apply_permutation(perm).scale_column(0, g2 * pow(g1, p - 2, p) % p)
            res += [_equal(G1.dual(), G2), _equal(moved, E2)]
        return _all(*res)

    kind = "self-dual" if case3 else "formally self-dual"
    chk.add("gray.ext", f"Gray images of the extended codes are {kind}", item_gray)
    return report


# Hermitian family (p = 2, q = 1 mod 8) ---------------------------------------


def _bachoc_within_bound(C: LinearCode, budget: int):
    bound = bachoc_bound(C.n)
    try:
        d_b = enumerate_weights(C, WeightKind.BACHOC, budget=budget).min_nonzero
        ok = d_b <= bound
        return ok, f"d_B={d_b} <= {bound}" if ok else f"d_B={d_b} exceeds {bound}", None
    except BudgetExceededError:
        pass
    # d_B <= 2 wt(s) for (s, 0), 2 wt(t) for (0, t), and wt(s) for (s, s)
    C1, C2 = C.crt
    cands = []
    for comp, factor in ((C1, 2), (C2, 2), (C1.intersect(C2), 1)):
        if comp.card_exponent:
            r = infoset_distance(comp, budget=10**7)
            cands.append(factor * r.d)
    best = min(cands)
    ok = best <= bound
    return ok, f"codeword with Bachoc weight {best} found, bound {bound} (enumeration over budget)", None


def verify_hermitian_family(q: int, budget: int = DEFAULT_BUDGET) -> TheoremReport:
    """Hermitian self-duality of Q' + <v h>, Q' + <(1+v) h> and the extended codes."""
    if q % 8 != 1:
        raise UnsupportedError(f"Hermitian family needs q = 1 mod 8, got q={q}")
    F = qr_family(2, q)
    report = TheoremReport({"p": 2, "q": q})
    chk = _Checker(report)
    e1, e2 = F.e1, F.e2
    one = np.zeros(q, dtype=np.int64)
    one[0] = 1
    vconst = RingPoly.constant(RingElement(0, 1, 2), q, 2)
    expect_v = {RingPoly(e2, e2, 2) + vconst, RingPoly(e1, e1, 2) + vconst}
    expect_1v = {RingPoly((one + e1) % 2, e1, 2), RingPoly((one + e2) % 2, e2, 2)}

    def item_idem(unit, expected):
        got = {hermitian_augment_idempotent(F, w, unit) for w in ("Q1p", "Q2p")}
        if got == expected:
            return True, "", None
        return False, f"got {{{', '.join(map(str, got))}}}", next(iter(got - expected))

    chk.add("H.idem.v", "idempotents of Q' + <v> are e2 + v and e1 + v", lambda: item_idem("v", expect_v))
    chk.add("H.idem.1v", "idempotents of Q' + <1+v> are 1 + v + e1 and 1 + v + e2",
            lambda: item_idem("1+v", expect_1v))

    codes = {}
    for w in ("Q1p", "Q2p"):
        for unit in ("v", "1+v"):
            codes[f"{w}+<{unit}>"] = lambda w=w, unit=unit: hermitian_augment(F, w, unit)
    codes["ext(Q1)"] = lambda: extend(F, "Q1")
    codes["ext(Q2)"] = lambda: extend(F, "Q2")

    for name, make in codes.items():
        def item_sd(make=make):
            C = make()
            res = [_size(C, C.n), _equal(C, C.hermitian_dual())]
            return _all(*res)

        chk.add(f"H.selfdual[{name}]", f"{name} is Hermitian self-dual of size 2^n", item_sd)
        chk.add(f"H.bound[{name}]", f"d_B({name}) <= 2(floor(n/3)+1)",
                lambda make=make: _bachoc_within_bound(make(), budget))

    for name in ("ext(Q1)", "ext(Q2)"):
        def item_even(make=codes[name]):
            C = make()
            try:
                ham = enumerate_weights(C, WeightKind.HAMMING, budget=budget)
            except BudgetExceededError:
                return True, "skipped: enumeration over budget", None
            odd = [w for w in ham.counts if w % 2]
            return (not odd), (f"odd weights {odd}" if odd else "all Hamming weights even"), None

        chk.add(f"H.typeIV[{name}]", f"{name} has only even Hamming weights", item_even)
    return report


# Gray map and psi -----------------------------------------------------------


def _lee_by_cases(a: int, b: int, p: int) -> int:
    """Lee weight of a + bv read off the case table (independent of the Gray map)."""
    if p == 2:
        return {(0, 0): 0, (1, 0): 2, (1, 1): 1, (0, 1): 1}[(a, b)]
    if a == 0 and b == 0:
        return 0
    if b == 0:
        return 1
    return 1 if (2 * a + b) % p == 0 else 2


def verify_gray_properties(p: int, n: int, trials: int = 10_000, seed: int = 0) -> TheoremReport:
    """Isometry, F_p-linearity and orthogonality preservation of the Gray map."""
    rng = np.random.default_rng(seed)
    report = TheoremReport({"p": p, "n": n, "trials": trials})
    chk = _Checker(report)
    lee = weight_table(p, WeightKind.LEE)

    def item_symbols():
        for a in range(p):
            for b in range(p):
                x = RingElement(a, b, p)
                s, t = x.crt()
                g = gray(x)
                if int(np.count_nonzero(g)) != _lee_by_cases(a, b, p) or lee[s, t] != _lee_by_cases(a, b, p):
                    return False, f"symbol {x}: gray {g.tolist()}", str(x)
        return True, f"all {p * p} symbols", None

    chk.add("gray.symbols", "Lee weight table equals Hamming weight of the symbol image", item_symbols)

    S = rng.integers(0, p, size=(trials, 2, n))
    Tm = rng.integers(0, p, size=(trials, 2, n))
    cs = rng.integers(0, p, size=trials)

    def gray_rows(X):
        s, t = X[:, 0], X[:, 1]
        if p == 2:
            return np.concatenate([s, t], axis=1)
        return np.concatenate([(s - t) % p, (s + t) % p], axis=1)

    GX, GY = gray_rows(S), gray_rows(Tm)

    def item_isometry():
        d_lee = lee[(S[:, 0] - Tm[:, 0]) % p, (S[:, 1] - Tm[:, 1]) % p].sum(axis=1)
        d_ham = np.count_nonzero((GX - GY) % p, axis=1)
        bad = np.flatnonzero(d_lee != d_ham)
        if bad.size:
            return False, f"{bad.size} pairs violate d_L = d_H(gray)", _pair(S[bad[0]], p)
        # spot-check the vectorised images against the scalar map
        for i in range(min(trials, 50)):
            w = RingPoly(S[i, 0], S[i, 1], p)
            if not np.array_equal(gray(w), GX[i]):
                return False, "vectorised Gray map disagrees with gray()", w
        return True, f"{trials} random pairs", None

    def item_linear():
        G_sum = gray_rows((S + Tm) % p)
        G_scaled = gray_rows((cs[:, None, None] * S) % p)
        bad = np.flatnonzero(((GX + GY - G_sum) % p).any(axis=1)
                             | ((cs[:, None] * GX - G_scaled) % p).any(axis=1))
        if bad.size:
            return False, f"{bad.size} linearity failures", _pair(S[bad[0]], p)
        return True, f"{trials} random pairs", None

    def item_orth():
        # inner product over R in (a, b) form: A + Bv
        a1, b1 = S[:, 0], (S[:, 1] - S[:, 0]) % p
        a2, b2 = Tm[:, 0], (Tm[:, 1] - Tm[:, 0]) % p
        A = (a1 * a2).sum(axis=1) % p
        B = (a1 * b2 + b1 * a2 + b1 * b2).sum(axis=1) % p
        g_inner = (GX * GY).sum(axis=1) % p
        expect = B % p if p == 2 else (4 * A + 2 * B) % p
        bad = np.flatnonzero(g_inner != expect)
        if bad.size:
            return False, f"{bad.size} pairs break the inner product identity", _pair(S[bad[0]], p)
        # orthogonal pairs built explicitly: fix the last coordinate of y
        zero_cases = 0
        for i in range(min(trials, 2000)):
            x = RingPoly(S[i, 0], S[i, 1], p)
            last = crt_join(int(S[i, 0, -1]), int(S[i, 1, -1]), p)
            if not last.is_unit():
                continue
            y_s, y_t = Tm[i, 0].copy(), Tm[i, 1].copy()
            part_s = int((x.s[:-1] * y_s[:-1]).sum() % p)
            part_t = int((x.t[:-1] * y_t[:-1]).sum() % p)
            inv_s, inv_t = pow(int(x.s[-1]), p - 2, p), pow(int(x.t[-1]), p - 2, p)
            y_s[-1] = (-part_s * inv_s) % p
            y_t[-1] = (-part_t * inv_t) % p
            y = RingPoly(y_s, y_t, p)
            if int(np.dot(gray(x), gray(y)) % p) != 0:
                return False, "orthogonal pair with non-orthogonal images", x
            zero_cases += 1
        return True, f"identity on {trials} pairs, {zero_cases} orthogonal pairs", None

    chk.add("gray.isometry", "d_L(x, y) = d_H(gray x, gray y)", item_isometry)
    chk.add("gray.linear", "gray(x + y) = gray x + gray y and gray(cx) = c gray x", item_linear)
    chk.add("gray.orthogonal", "orthogonal words have orthogonal Gray images", item_orth)
    return report


def _pair(X, p):
    return RingPoly(X[0], X[1], p)


def verify_psi(p: int, n: int, trials: int = 1000, seed: int = 0) -> TheoremReport:
    """psi: R_{p,n} -> R[x]/(x^n - (1-2v)) is a bijective ring map taking ideals to ideals."""
    if n % 2 == 0:
        raise UnsupportedError("psi is only an isomorphism for odd n")
    rng = np.random.default_rng(seed)
    report = TheoremReport({"p": p, "n": n, "trials": trials})
    chk = _Checker(report)

    def rand_poly():
        return RingPoly(rng.integers(0, p, n), rng.integers(0, p, n), p)

    pairs = [(rand_poly(), rand_poly()) for _ in range(trials)]
    unit_x = np.zeros(n, dtype=np.int64)
    unit_x[1 % n] = 1
    x = RingPoly(unit_x, unit_x, p)

    def item_mult():
        for f, g in pairs:
            if psi_transform(poly_mul(f, g)) != poly_mul_S(psi_transform(f), psi_transform(g)):
                return False, "psi(fg) != psi(f) psi(g)", f
            if psi_transform(f + g) != psi_transform(f) + psi_transform(g):
                return False, "psi(f + g) != psi(f) + psi(g)", f
        return True, f"{trials} random pairs", None

    def item_bij():
        for f, _ in pairs:
            if psi_inverse(psi_transform(f)) != f:
                return False, "psi is not invertible on this element", f
        if p ** (2 * n) <= 2**16:
            images = {psi_transform(RingPoly(s, t, p)).__hash__()
                      for s in _all_vectors(p, n) for t in _all_vectors(p, n)}
            if len(images) != p ** (2 * n):
                return False, "psi is not injective", None
            return True, "exhaustive injectivity", None
        return True, f"round trip on {trials} elements", None

    def item_ideal():
        try:
            I = qr_family(p, n).code("Q1")
        except (NotQRSettingError, DomainError):
            # a proper ideal: anything times (x - 1)
            f = rand_poly()
            I = LinearCode.from_cyclic(poly_mul(f, x - RingPoly.one(n, p)))
        gens = [psi_transform(g) for g in I.generator_rows()]
        J = LinearCode.from_ring_rows(gens)
        for g in gens:
            if not J.contains(poly_mul_S(x, g)):
                return False, "psi(I) is not closed under multiplication by x", g
        if J.card_exponent != I.card_exponent:
            return False, "psi changed the size of the ideal", None
        return True, f"ideal of size p^{I.card_exponent}", None

    chk.add("psi.ring_map", "psi is additive and multiplicative", item_mult)
    chk.add("psi.bijective", "psi is a bijection", item_bij)
    chk.add("psi.ideals", "psi maps an ideal to an ideal", item_ideal)
    return report


def _all_vectors(p, n):
    return np.indices((p,) * n).reshape(n, -1).T
