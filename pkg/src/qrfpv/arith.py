"""Prime fields and the ring F_p + vF_p with v^2 = v.

The ring splits as F_p x F_p by evaluating v at 0 and at 1; most of the
package works on those two components rather than on (a, b) pairs.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, ModulusMismatchError, UnsupportedError


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """The field Z/pZ. Elements are plain ints in [0, p)."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        self.p = p

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("F", self.p))

    def __call__(self, x: int) -> int:
        return x % self.p

    def inv(self, x: int) -> int:
        x %= self.p
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(x, self.p - 2, self.p)

    def sqrt(self, x: int) -> int | None:
        return sqrt_mod_p(x, self.p)

    def elements(self):
        return range(self.p)


@dataclass(frozen=True)
class RingElement:
    """a + b*v over F_p, stored canonically with 0 <= a, b < p."""

    a: int
    b: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "a", self.a % self.p)
        object.__setattr__(self, "b", self.b % self.p)

    @classmethod
    def from_crt(cls, s: int, t: int, p: int) -> RingElement:
        return crt_join(s, t, p)

    @classmethod
    def parse(cls, text: str, p: int) -> RingElement:
        return parse_element(text, p)

    def _check(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        if other.p != self.p:
            raise ModulusMismatchError(f"p={self.p} vs p={other.p}")
        return other

    def __add__(self, other):
        if isinstance(other, int):
            other = RingElement(other, 0, self.p)
        if self._check(other) is NotImplemented:
            return NotImplemented
        return RingElement(self.a + other.a, self.b + other.b, self.p)

    __radd__ = __add__

    def __neg__(self):
        return RingElement(-self.a, -self.b, self.p)

    def __sub__(self, other):
        if isinstance(other, int):
            other = RingElement(other, 0, self.p)
        if self._check(other) is NotImplemented:
            return NotImplemented
        return RingElement(self.a - other.a, self.b - other.b, self.p)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElement(self.a * other, self.b * other, self.p)
        if self._check(other) is NotImplemented:
            return NotImplemented
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return RingElement(a1 * a2, a1 * b2 + a2 * b1 + b1 * b2, self.p)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.a or self.b)

    def crt(self) -> tuple[int, int]:
        return crt_split(self)

    def is_unit(self) -> bool:
        s, t = self.crt()
        return s != 0 and t != 0

    def inverse(self) -> RingElement:
        s, t = self.crt()
        if s == 0 or t == 0:
            raise ZeroDivisionError(f"{self} is not a unit")
        return crt_join(pow(s, self.p - 2, self.p), pow(t, self.p - 2, self.p), self.p)

    def conj(self) -> RingElement:
        return hermitian_conj(self)

    def __str__(self):
        return format_element(self)


def zero(p: int) -> RingElement:
    return RingElement(0, 0, p)


def one(p: int) -> RingElement:
    return RingElement(1, 0, p)


def v(p: int) -> RingElement:
    return RingElement(0, 1, p)


def add(x: RingElement, y: RingElement) -> RingElement:
    return x + y


def mul(x: RingElement, y: RingElement) -> RingElement:
    return x * y


def crt_split(x: RingElement) -> tuple[int, int]:
    """Values at v=0 and v=1."""
    return x.a, (x.a + x.b) % x.p


def crt_join(s: int, t: int, p: int) -> RingElement:
    """(1-v)s + vt."""
    return RingElement(s, t - s, p)


def hermitian_conj(x: RingElement) -> RingElement:
    """Conjugation of F_2 + vF_2 swapping v and 1+v."""
    if x.p != 2:
        raise UnsupportedError(f"Hermitian conjugation needs p=2, got p={x.p}")
    # swapping v <-> 1+v swaps the CRT components
    s, t = crt_split(x)
    return crt_join(t, s, 2)


def is_qr_mod(a: int, q: int) -> bool:
    """Euler's criterion for a nonzero residue a modulo an odd prime q."""
    if q < 3 or not is_prime(q):
        raise DomainError(f"{q} is not an odd prime")
    if a % q == 0:
        raise DomainError(f"{a} is divisible by {q}")
    return pow(a, (q - 1) // 2, q) == 1


def sqrt_mod_p(a: int, p: int) -> int | None:
    """Smallest square root of a mod p, or None."""
    a %= p
    for r in range(p):
        if r * r % p == a:
            return r
    return None


def parse_element(text: str, p: int) -> RingElement:
    """Parse "a+bv" forms such as "1+2v", "v", "3", "2v", "0"."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty ring element")
    a = b = 0
    for term in s.replace("-", "+-").split("+"):
        if not term:
            continue
        if term.endswith("v"):
            coef = term[:-1]
            b += {"": 1, "-": -1}.get(coef) if coef in ("", "-") else int(coef)
        else:
            a += int(term)
    return RingElement(a, b, p)


def format_element(x: RingElement) -> str:
    if x.b == 0:
        return str(x.a)
    vpart = "v" if x.b == 1 else f"{x.b}v"
    return vpart if x.a == 0 else f"{x.a}+{vpart}"
