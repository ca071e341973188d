"""RT weights, m-spotty RT weights and distances, and weight distributions.

Element index 0 is the zero of every ring, so weights only need the indices;
the distance additionally needs ring subtraction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .codes import ByteLayout, Code
from .errors import LayoutMismatch
from .poly import Poly
from .rings import FiniteRing


def ceil_div(a: int, t: int) -> int:
    return -(-a // t)


def rt_weight(byte: Sequence[int]) -> int:
    """1-based position of the last nonzero entry; 0 for the zero byte."""
    for i in range(len(byte), 0, -1):
        if byte[i - 1] != 0:
            return i
    return 0


def _bytes_of(c: Sequence[int], layout: ByteLayout):
    if len(c) != layout.N:
        raise LayoutMismatch(f"codeword length {len(c)} does not match N = {layout.N}")
    b = layout.b
    return [c[i * b:(i + 1) * b] for i in range(layout.n)]


def mspotty_weight(c: Sequence[int], layout: ByteLayout) -> int:
    return sum(ceil_div(rt_weight(e), layout.t) for e in _bytes_of(c, layout))


def mspotty_distance(ring: FiniteRing, c: Sequence[int], v: Sequence[int], layout: ByteLayout) -> int:
    """Sum over bytes of ceil(w_RT(c_i - v_i) / t)."""
    if len(c) != len(v):
        raise LayoutMismatch(f"codewords of different lengths {len(c)} and {len(v)}")
    diff = [int(ring.sub(x, y)) for x, y in zip(c, v)]
    return mspotty_weight(diff, layout)


def weight_vector(c: Sequence[int], layout: ByteLayout) -> tuple[int, ...]:
    alphas = [0] * (layout.b + 1)
    for e in _bytes_of(c, layout):
        alphas[rt_weight(e)] += 1
    return tuple(alphas)


def byte_rt_weights(words: np.ndarray, layout: ByteLayout) -> np.ndarray:
    """Vectorised RT weight of every byte: ``(m, N) -> (m, n)``."""
    B = np.asarray(words).reshape(len(words), layout.n, layout.b) != 0
    last = layout.b - np.argmax(B[:, :, ::-1], axis=2)
    return np.where(B.any(axis=2), last, 0)


def mspotty_weights(words: np.ndarray, layout: ByteLayout) -> np.ndarray:
    w = byte_rt_weights(words, layout)
    return (-(-w // layout.t)).sum(axis=1)


def weight_vectors(words: np.ndarray, layout: ByteLayout) -> np.ndarray:
    """Vectorised RT weight distribution vectors: ``(m, N) -> (m, b + 1)``."""
    w = byte_rt_weights(words, layout)
    return np.stack([(w == j).sum(axis=1) for j in range(layout.b + 1)], axis=1)


@dataclass
class DistributionTable:
    """Counts ``A_alpha`` of codewords per RT weight distribution vector."""

    ell: int
    layout: ByteLayout
    counts: dict[tuple[int, ...], int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def items(self):
        return sorted(self.counts.items())

    def __eq__(self, other):
        if not isinstance(other, DistributionTable):
            return NotImplemented
        return (self.ell, self.layout.n, self.layout.b) == (other.ell, other.layout.n, other.layout.b) \
            and self.counts == other.counts

    def merge(self, other: "DistributionTable") -> "DistributionTable":
        """Sum of counts; combines tables computed over disjoint shards."""
        merged = dict(self.counts)
        for a, k in other.counts.items():
            merged[a] = merged.get(a, 0) + k
        return DistributionTable(self.ell, self.layout, merged)

    def to_json_obj(self) -> list[dict]:
        return [{"alphas": list(a), "count": k} for a, k in self.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj, ell: int, layout: ByteLayout) -> "DistributionTable":
        return cls(ell, layout, {tuple(e["alphas"]): int(e["count"]) for e in obj})

    def render(self) -> str:
        rows = [("RT weight vector", "number")]
        rows += [("(" + ", ".join(map(str, a)) + ")", str(k)) for a, k in self.items()]
        width = max(len(r[0]) for r in rows)
        return "\n".join(f"{a.ljust(width)}  {k}" for a, k in rows)


def distribution_of_words(words: np.ndarray, ell: int, layout: ByteLayout) -> DistributionTable:
    if len(words) == 0:
        return DistributionTable(ell, layout, {})
    vecs, counts = np.unique(weight_vectors(words, layout), axis=0, return_counts=True)
    return DistributionTable(ell, layout, {tuple(int(x) for x in a): int(k) for a, k in zip(vecs, counts)})


def distribution(code: Code) -> DistributionTable:
    return distribution_of_words(code.words, code.ring.order, code.layout)


def enumerator(dist: DistributionTable, t: int | None = None) -> Poly:
    """W(z) = sum_alpha A_alpha z^(sum_j ceil(j/t) alpha_j)."""
    t = dist.layout.t if t is None else t
    coeffs: dict[int, int] = {}
    for alphas, count in dist.counts.items():
        d = sum(ceil_div(j, t) * a for j, a in enumerate(alphas))
        coeffs[d] = coeffs.get(d, 0) + count
    if not coeffs:
        return Poly()
    return Poly(coeffs.get(d, 0) for d in range(max(coeffs) + 1))


def enumerator_by_words(words: np.ndarray, layout: ByteLayout) -> Poly:
    """W(z) accumulated codeword by codeword (no distribution table involved)."""
    w = mspotty_weights(words, layout)
    return Poly(np.bincount(w).tolist()) if len(w) else Poly()
