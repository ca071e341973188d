"""Exact arithmetic in the cyclotomic integers Z[zeta_M].

Values are stored as coefficient vectors in Z[x]/(x^M - 1); equality and
integer recognition reduce modulo the M-th cyclotomic polynomial.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .errors import InvalidParameter, ModulusMismatch, NotAnInteger


def _divexact(num: list[int], den: Sequence[int]) -> list[int]:
    """Exact quotient of integer polynomials; ``den`` is monic."""
    num = list(num)
    dn = len(den) - 1
    q = [0] * (len(num) - dn)
    for d in range(len(num) - 1, dn - 1, -1):
        c = num[d]
        if c:
            q[d - dn] = c
            for i in range(dn + 1):
                num[d - dn + i] -= c * den[i]
    if any(num):
        raise ArithmeticError("non-exact cyclotomic division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(M: int) -> tuple[int, ...]:
    """Phi_M, low-to-high, as (x^M - 1) / prod_{d | M, d < M} Phi_d."""
    if M < 1:
        raise InvalidParameter(f"cyclotomic modulus must be >= 1, got {M}")
    poly = [-1] + [0] * (M - 1) + [1]
    for d in range(1, M):
        if M % d == 0:
            poly = _divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def _reduce(coeffs: Sequence[int], M: int) -> tuple[int, ...]:
    """Remainder modulo Phi_M (length phi(M), trailing zeros kept)."""
    phi = cyclotomic_polynomial(M)
    r = len(phi) - 1
    a = list(coeffs)
    for d in range(len(a) - 1, r - 1, -1):
        c = a[d]
        if c:
            for i in range(r + 1):
                a[d - r + i] -= c * phi[i]
    return tuple((a + [0] * r)[:r])


class CycInt:
    """An element ``sum c_j zeta_M^j`` of Z[zeta_M]."""

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: int, coeffs: Iterable[int] = ()):
        if modulus < 1:
            raise InvalidParameter(f"cyclotomic modulus must be >= 1, got {modulus}")
        folded = [0] * modulus
        for j, c in enumerate(coeffs):
            folded[j % modulus] += int(c)
        self.modulus = modulus
        self.coeffs = tuple(folded)

    @classmethod
    def from_int(cls, modulus: int, n: int) -> "CycInt":
        return cls(modulus, [n])

    def _check(self, other) -> "CycInt":
        if isinstance(other, int):
            return CycInt.from_int(self.modulus, other)
        if not isinstance(other, CycInt):
            return NotImplemented
        if other.modulus != self.modulus:
            raise ModulusMismatch(f"Z[zeta_{self.modulus}] vs Z[zeta_{other.modulus}]")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CycInt(self.modulus, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.modulus, [-a for a in self.coeffs])

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        M = self.modulus
        out = [0] * M
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[(i + j) % M] += a * b
        return CycInt(M, out)

    __rmul__ = __mul__

    def reduced(self) -> tuple[int, ...]:
        return _reduce(self.coeffs, self.modulus)

    def __eq__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return not any((self - other).reduced())

    def __hash__(self):
        return hash((self.modulus, self.reduced()))

    def __repr__(self):
        terms = [f"{c}*z{self.modulus}^{j}" for j, c in enumerate(self.coeffs) if c]
        return f"CycInt({' + '.join(terms) or '0'})"

    def as_integer(self) -> int | None:
        r = self.reduced()
        if any(r[1:]):
            return None
        return r[0] if r else 0


def root(M: int, e: int) -> CycInt:
    """The monomial zeta_M ** (e mod M)."""
    if M < 1:
        raise InvalidParameter(f"cyclotomic modulus must be >= 1, got {M}")
    coeffs = [0] * M
    coeffs[e % M] = 1
    return CycInt(M, coeffs)


def add(a: CycInt, b: CycInt) -> CycInt:
    return a + b


def mul(a: CycInt, b: CycInt) -> CycInt:
    return a * b


def as_integer(a: CycInt) -> int | None:
    return a.as_integer()


def exponent_sum_to_int(M: int, counts: Sequence[int]) -> int:
    """Value of ``sum_e counts[e] * zeta_M^e``; raises NotAnInteger if irrational."""
    n = CycInt(M, counts).as_integer()
    if n is None:
        raise NotAnInteger(f"character sum {list(counts)} over Z[zeta_{M}] is not a rational integer")
    return n
