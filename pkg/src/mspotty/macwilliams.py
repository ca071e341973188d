"""MacWilliams transform for m-spotty RT weight enumerators.

The per-byte kernel is

    V_j(z) = sum_{k=0}^{b} S(k, j) z^ceil(k/t)

where ``S(k, j)`` is the character sum of ``chi(<c, v>)`` over bytes ``v`` of
RT weight ``k`` against a fixed byte ``c`` of RT weight ``j``.  The dual
enumerator is

    W_dual(z) = (1/|C|) sum_alpha A_alpha prod_j V_j(z)^alpha_j.

The closed form of ``S`` and the transform are checked here against exact
character sums over Z[zeta_M] (no floating point anywhere).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .codes import DEFAULT_MAX_SWEEP, ByteLayout, Code, dual, index_chunks
from .cyclotomic import exponent_sum_to_int
from .errors import InvalidParameter, LayoutMismatch, OutOfRange, SizeLimitExceeded
from .poly import Poly
from .rings import FiniteRing
from .weights import (
    DistributionTable,
    byte_rt_weights,
    ceil_div,
    distribution,
    enumerator,
    mspotty_weights,
    rt_weight,
)


def s_value(ell: int, b: int, k: int, j: int) -> int:
    """Closed form of the character sum S(k, j) for a ring of order ``ell``."""
    if ell < 2:
        raise OutOfRange(f"ring order must be >= 2, got {ell}")
    if b < 1 or not 0 <= k <= b or not 0 <= j <= b:
        raise OutOfRange(f"need 0 <= k, j <= b with b >= 1, got b={b}, k={k}, j={j}")
    if k == 0:
        return 1
    if k <= b - j:
        return ell ** (k - 1) * (ell - 1)
    if k == b + 1 - j:
        return -ell ** (k - 1)
    return 0


def _byte_pairing(ring: FiniteRing, c: np.ndarray, V: np.ndarray) -> np.ndarray:
    """Reversed pairing of witness bytes ``c`` (m, b) with all bytes ``V`` (L, b) -> (m, L)."""
    b = V.shape[1]
    acc = np.zeros((c.shape[0], V.shape[0]), dtype=ring.add.dtype)
    for p in range(b):
        acc = ring.add[acc, ring.mul[c[:, p][:, None], V[None, :, b - 1 - p]]]
    return acc


def s_value_oracle(ring: FiniteRing, b: int, k: int, j: int, witness: Sequence[int] | None = None,
                   max_sweep: int = DEFAULT_MAX_SWEEP) -> int:
    """S(k, j) as an exact character sum over every byte of RT weight ``k``.

    ``witness`` defaults to the byte with the ring's identity at position j.
    """
    if b < 1 or not 0 <= k <= b or not 0 <= j <= b:
        raise OutOfRange(f"need 0 <= k, j <= b with b >= 1, got b={b}, k={k}, j={j}")
    if witness is None:
        witness = tuple(ring.one if i == j - 1 else 0 for i in range(b))
    if len(witness) != b or rt_weight(witness) != j:
        raise OutOfRange(f"witness {tuple(witness)} does not have length {b} and RT weight {j}")
    if ring.order ** b > max_sweep:
        raise SizeLimitExceeded(f"byte sweep ({ring.order}^{b})", ring.order ** b, max_sweep)
    V = next(index_chunks(ring.order, b, chunk=ring.order ** b)).astype(ring.add.dtype)
    V = V[byte_rt_weights(V, ByteLayout(1, b))[:, 0] == k]
    c = np.asarray(witness, dtype=ring.add.dtype)[None, :]
    exps = ring.char_exp[_byte_pairing(ring, c, V)[0]]
    return exponent_sum_to_int(ring.char_modulus, np.bincount(exps, minlength=ring.char_modulus))


def s_value_sweep(ring: FiniteRing, b: int, max_sweep: int = DEFAULT_MAX_SWEEP,
                  pair_chunk: int = 2 ** 22):
    """S(k, .) for every witness byte at once.

    Returns ``(witnesses, j, S)`` where row ``i`` of ``S`` holds the exact
    sums for ``k = 0..b`` against witness ``witnesses[i]`` of RT weight ``j[i]``.
    """
    L = ring.order ** b
    if L > max_sweep:
        raise SizeLimitExceeded(f"byte sweep ({ring.order}^{b})", L, max_sweep)
    M = ring.char_modulus
    layout = ByteLayout(1, b)
    V = next(index_chunks(ring.order, b, chunk=L)).astype(ring.add.dtype)
    kv = byte_rt_weights(V, layout)[:, 0]
    S = np.zeros((L, b + 1), dtype=object)
    cache: dict[tuple[int, ...], int] = {}
    step = max(1, pair_chunk // L)
    for start in range(0, L, step):
        C = V[start:start + step]
        m = len(C)
        exps = ring.char_exp[_byte_pairing(ring, C, V)]
        flat = (np.arange(m)[:, None] * (b + 1) * M + kv[None, :] * M + exps).ravel()
        counts = np.bincount(flat, minlength=m * (b + 1) * M).reshape(m, b + 1, M)
        for i in range(m):
            for k in range(b + 1):
                key = (M,) + tuple(counts[i, k].tolist())
                if key not in cache:
                    cache[key] = exponent_sum_to_int(M, counts[i, k])
                S[start + i, k] = cache[key]
    return V, kv, S


@dataclass(frozen=True)
class VTable:
    ell: int
    b: int
    t: int
    polys: tuple[Poly, ...]

    def __getitem__(self, j: int) -> Poly:
        return self.polys[j]

    def render(self) -> str:
        return "\n".join(f"V_{j}^({self.t},{self.ell})(z) = {p}" for j, p in enumerate(self.polys))


def v_table(ell: int, b: int, t: int) -> VTable:
    if not 1 <= t <= b:
        raise OutOfRange(f"need 1 <= t <= b, got t={t}, b={b}")
    polys = []
    for j in range(b + 1):
        coeffs = [0] * (ceil_div(b, t) + 1)
        for k in range(b + 1):
            coeffs[ceil_div(k, t)] += s_value(ell, b, k, j)
        polys.append(Poly(coeffs))
    return VTable(ell, b, t, tuple(polys))


def transform(dist: DistributionTable, card: int, vt: VTable) -> Poly:
    """Dual enumerator from the RT weight distribution of the code."""
    if dist.ell != vt.ell or dist.layout.b != vt.b:
        raise LayoutMismatch(f"distribution (ell={dist.ell}, b={dist.layout.b}) vs "
                             f"V table (ell={vt.ell}, b={vt.b})")
    if dist.total != card:
        raise InvalidParameter(f"distribution counts sum to {dist.total}, not |C| = {card}")
    powers: dict[tuple[int, int], Poly] = {}
    total = Poly()
    for alphas, count in dist.items():
        term = Poly.constant(count)
        for j, a in enumerate(alphas):
            if a:
                if (j, a) not in powers:
                    powers[j, a] = vt[j] ** a
                term = term * powers[j, a]
        total = total + term
    return total.exact_div(card)


def fourier_product(c: Sequence[int], layout: ByteLayout, vt: VTable) -> Poly:
    """prod_i V_{w_RT(c_i)}(z)."""
    b = layout.b
    out = Poly.constant(1)
    for i in range(layout.n):
        out = out * vt[rt_weight(c[i * b:(i + 1) * b])]
    return out


def fourier_oracle(ring: FiniteRing, layout: ByteLayout, c: Sequence[int],
                   max_sweep: int = DEFAULT_MAX_SWEEP) -> Poly:
    """sum_v chi(<c, v>) z^w_MRT(v) over all of R^N, evaluated exactly."""
    if len(c) != layout.N:
        raise LayoutMismatch(f"codeword length {len(c)} does not match N = {layout.N}")
    total = ring.order ** layout.N
    if total > max_sweep:
        raise SizeLimitExceeded(f"Fourier sweep ({ring.order}^{layout.N})", total, max_sweep)
    M = ring.char_modulus
    top = layout.n * ceil_div(layout.b, layout.t)
    gr = np.asarray(c, dtype=np.int64)[layout.reversal()]
    counts = np.zeros((top + 1) * M, dtype=np.int64)
    for block in index_chunks(ring.order, layout.N):
        block = block.astype(ring.add.dtype)
        s = np.zeros(len(block), dtype=ring.add.dtype)
        for p in range(layout.N):
            if gr[p]:
                s = ring.add[s, ring.mul[gr[p]][block[:, p]]]
        key = mspotty_weights(block, layout) * M + ring.char_exp[s]
        counts += np.bincount(key, minlength=(top + 1) * M)
    counts = counts.reshape(top + 1, M)
    return Poly(exponent_sum_to_int(M, counts[d]) for d in range(top + 1))


@dataclass
class IdentityReport:
    equal: bool
    via_transform: Poly
    via_dual: Poly
    card: int
    dual_card: int
    dual_code: Code

    @property
    def verdict(self) -> str:
        return "PASS" if self.equal else "FAIL"


def verify_identity(code: Code, max_sweep: int = DEFAULT_MAX_SWEEP) -> IdentityReport:
    """Dual enumerator computed by the transform and by brute-force dual enumeration."""
    layout = code.layout
    vt = v_table(code.ring.order, layout.b, layout.t)
    lhs = transform(distribution(code), code.cardinality, vt)
    d = dual(code, max_sweep=max_sweep)
    rhs = enumerator(distribution(d))
    return IdentityReport(lhs == rhs, lhs, rhs, code.cardinality, d.cardinality, d)
