"""Byte-structured linear codes over tabulated rings.

A codeword of length ``N = n*b`` is split into ``n`` bytes of ``b`` symbols.
Duality uses the reversed byte inner product

    <c, v> = sum_i sum_j c[i, j] * v[i, b - j + 1]

so each byte of ``c`` is paired with the mirror image of the matching byte
of ``v``.  Spans and duals are computed by exhaustive, chunked sweeps; every
sweep is bounded by ``max_sweep``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    InvalidParameter,
    LayoutMismatch,
    SizeLimitExceeded,
    SpecSyntaxError,
)
from .rings import FiniteRing, RingSpec, build, parse_spec

DEFAULT_MAX_SWEEP = 2 ** 24
CHUNK = 2 ** 16


@dataclass(frozen=True)
class ByteLayout:
    n: int
    b: int
    t: int = 1

    def __post_init__(self):
        if self.n < 1 or self.b < 1:
            raise InvalidParameter(f"need n >= 1 and b >= 1, got n={self.n}, b={self.b}")
        if not 1 <= self.t <= self.b:
            raise InvalidParameter(f"need 1 <= t <= b, got t={self.t}, b={self.b}")

    @property
    def N(self) -> int:
        return self.n * self.b

    def with_t(self, t: int) -> "ByteLayout":
        return ByteLayout(self.n, self.b, t)

    def reversal(self) -> np.ndarray:
        """Permutation mirroring every byte in place (an involution)."""
        b = self.b
        return np.array([i * b + (b - 1 - j) for i in range(self.n) for j in range(b)])


def index_chunks(base: int, width: int, chunk: int = CHUNK) -> Iterator[np.ndarray]:
    """All ``base**width`` digit vectors in index order, as ``(m, width)`` blocks.

    Position 0 is the least significant digit.  Blocks are disjoint index
    ranges, so a sweep can be split across workers and merged by union.
    """
    total = base ** width
    powers = base ** np.arange(width, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        yield (idx[:, None] // powers[None, :]) % base


def _check_sweep(what: str, size: int, limit: int):
    if size > limit:
        raise SizeLimitExceeded(what, size, limit)


class Code:
    """The R-linear span of a generator matrix, with its words enumerated.

    ``words`` is an ``(|C|, N)`` array of element indices, rows sorted
    lexicographically and free of duplicates.
    """

    def __init__(self, ring: FiniteRing, layout: ByteLayout, generator: np.ndarray, words: np.ndarray):
        self.ring = ring
        self.layout = layout
        self.generator = generator
        self.words = words
        self.generator.flags.writeable = False
        self.words.flags.writeable = False

    def __repr__(self):
        return (f"Code({self.ring.spec}, n={self.layout.n}, b={self.layout.b}, "
                f"t={self.layout.t}, |C|={self.cardinality})")

    @property
    def cardinality(self) -> int:
        return len(self.words)

    def __len__(self):
        return self.cardinality

    def word_set(self) -> set[tuple[int, ...]]:
        return {tuple(int(x) for x in w) for w in self.words}

    def __contains__(self, v) -> bool:
        v = np.asarray(v)
        return bool(np.any(np.all(self.words == v[None, :], axis=1)))

    def with_t(self, t: int) -> "Code":
        """Same code, different spotty parameter (the word set does not depend on t)."""
        return Code(self.ring, self.layout.with_t(t), self.generator, self.words)


def _as_matrix(ring: FiniteRing, layout: ByteLayout, generator) -> np.ndarray:
    G = np.array(generator, dtype=np.int64)
    if G.ndim == 1:
        G = G[None, :]
    if G.ndim != 2 or G.shape[0] == 0 or G.shape[1] != layout.N:
        raise DimensionMismatch(f"generator must be k x {layout.N} with k >= 1, got shape {G.shape}")
    if G.size and (G.min() < 0 or G.max() >= ring.order):
        raise InvalidParameter(f"generator entries must lie in [0, {ring.order})")
    return G


def _combine(ring: FiniteRing, coeffs: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """``coeffs @ rows`` in the ring, for a block of coefficient tuples."""
    acc = np.zeros((coeffs.shape[0], rows.shape[1]), dtype=ring.add.dtype)
    for i, g in enumerate(rows):
        acc = ring.add[acc, ring.mul[coeffs[:, i][:, None], g[None, :]]]
    return acc


def span(ring: FiniteRing, layout: ByteLayout, generator, max_sweep: int = DEFAULT_MAX_SWEEP) -> Code:
    """All R-linear combinations of the generator rows."""
    G = _as_matrix(ring, layout, generator)
    k = G.shape[0]
    _check_sweep(f"span sweep ({ring.order}^{k} coefficient tuples)", ring.order ** k, max_sweep)
    parts = [np.unique(_combine(ring, coeffs, G), axis=0) for coeffs in index_chunks(ring.order, k)]
    words = np.unique(np.concatenate(parts), axis=0)
    return Code(ring, layout, G, words)


def inner_product(ring: FiniteRing, layout: ByteLayout, c: Sequence[int], v: Sequence[int]) -> int:
    """Reversed byte inner product, evaluated in the ring."""
    if len(c) != layout.N or len(v) != layout.N:
        raise LayoutMismatch(f"expected two vectors of length {layout.N}, got {len(c)} and {len(v)}")
    b = layout.b
    acc = 0
    for i in range(layout.n):
        for j in range(b):
            acc = ring.add[acc, ring.mul[c[i * b + j], v[i * b + b - 1 - j]]]
    return int(acc)


def _orthogonal_mask(ring: FiniteRing, layout: ByteLayout, rows: np.ndarray, block: np.ndarray) -> np.ndarray:
    rev = layout.reversal()
    keep = np.ones(block.shape[0], dtype=bool)
    for g in rows:
        if not g.any():
            continue
        gr = g[rev]
        s = np.zeros(block.shape[0], dtype=ring.add.dtype)
        for p in range(layout.N):
            if gr[p]:
                s = ring.add[s, ring.mul[gr[p]][block[:, p]]]
        keep &= s == 0
    return keep


def _row_keys(words: np.ndarray, base: int) -> np.ndarray:
    powers = base ** np.arange(words.shape[1], dtype=np.int64)
    return (words.astype(np.int64) * powers).sum(axis=1)


def spanning_rows(ring: FiniteRing, words: np.ndarray) -> np.ndarray:
    """A small generating set of the submodule whose elements are ``words``.

    Greedy: repeatedly adjoin the first word not yet in the running span.
    Requires ``order**N`` to fit in a signed 64-bit key.
    """
    N = words.shape[1]
    if ring.order ** N >= 2 ** 63:
        raise SizeLimitExceeded("key space for generator extraction", ring.order ** N, 2 ** 63 - 1)
    keys = _row_keys(words, ring.order)
    cand, cand_keys = words[keys != 0], keys[keys != 0]
    span_rows = np.zeros((1, N), dtype=ring.add.dtype)
    span_keys = np.zeros(1, dtype=np.int64)
    gens = []
    while len(cand):
        w = cand[0]
        gens.append(w)
        grown = np.concatenate([ring.add[span_rows, ring.mul[r][w][None, :]] for r in range(ring.order)])
        gk = _row_keys(grown, ring.order)
        span_keys, first = np.unique(gk, return_index=True)
        span_rows = grown[first]
        outside = ~np.isin(cand_keys, span_keys)
        cand, cand_keys = cand[outside], cand_keys[outside]
    if not gens:
        gens.append(np.zeros(N, dtype=words.dtype))
    return np.array(gens, dtype=np.int64)


def dual(code: Code, max_sweep: int = DEFAULT_MAX_SWEEP) -> Code:
    """Brute-force orthogonal complement under the reversed byte inner product."""
    ring, layout = code.ring, code.layout
    total = ring.order ** layout.N
    _check_sweep(f"dual sweep ({ring.order}^{layout.N} vectors)", total, max_sweep)
    rows = code.generator
    found = []
    for block in index_chunks(ring.order, layout.N):
        block = block.astype(ring.add.dtype)
        found.append(block[_orthogonal_mask(ring, layout, rows, block)])
    words = np.unique(np.concatenate(found), axis=0)
    return Code(ring, layout, spanning_rows(ring, words), words)


def full_space(ring: FiniteRing, layout: ByteLayout) -> Code:
    """R^N, generated by the standard basis."""
    G = np.eye(layout.N, dtype=np.int64) * ring.one
    return span(ring, layout, G, max_sweep=max(DEFAULT_MAX_SWEEP, ring.order ** layout.N))


# ---------------------------------------------------------------------------
# generator-matrix files
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GeneratorFile:
    ring: RingSpec
    layout: ByteLayout
    rows: tuple[tuple[int, ...], ...]

    def to_json(self) -> str:
        return json.dumps({"ring": str(self.ring), "n": self.layout.n, "b": self.layout.b,
                           "t": self.layout.t, "rows": [list(r) for r in self.rows]})

    def to_text(self) -> str:
        head = f"ring={self.ring} n={self.layout.n} b={self.layout.b} t={self.layout.t}"
        return "\n".join([head] + [" ".join(map(str, r)) for r in self.rows]) + "\n"


_HEADER = re.compile(r"(\w+)\s*=\s*(.*?)(?=\s+\w+\s*=|\s*$)")


def _layout_from(fields: dict, where: str) -> ByteLayout:
    try:
        n, b = int(fields["n"]), int(fields["b"])
        t = int(fields.get("t", 1))
    except KeyError as e:
        raise SpecSyntaxError(f"{where}: missing field {e.args[0]!r}") from None
    except (TypeError, ValueError):
        raise SpecSyntaxError(f"{where}: n, b, t must be integers") from None
    return ByteLayout(n, b, t)


def parse_generator_text(text: str, where: str = "<text>") -> GeneratorFile:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise SpecSyntaxError(f"{where}: empty generator file")
    if lines[0].startswith("{"):
        return parse_generator_json("\n".join(lines), where)
    fields = dict(_HEADER.findall(lines[0]))
    if "ring" not in fields:
        raise SpecSyntaxError(f"{where}: first line must be 'ring=<spec> n=<n> b=<b> t=<t>'")
    ring = parse_spec(fields["ring"])
    layout = _layout_from(fields, where)
    try:
        rows = tuple(tuple(int(x) for x in ln.split()) for ln in lines[1:])
    except ValueError:
        raise SpecSyntaxError(f"{where}: matrix rows must be whitespace-separated integers") from None
    return GeneratorFile(ring, layout, rows)


def parse_generator_json(text: str, where: str = "<json>") -> GeneratorFile:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecSyntaxError(f"{where}: invalid JSON ({e})") from None
    if not isinstance(obj, dict) or "ring" not in obj or "rows" not in obj:
        raise SpecSyntaxError(f"{where}: JSON generator needs 'ring', 'n', 'b', 't', 'rows'")
    layout = _layout_from(obj, where)
    rows = tuple(tuple(int(x) for x in r) for r in obj["rows"])
    return GeneratorFile(parse_spec(obj["ring"]), layout, rows)


def read_generator_file(path) -> GeneratorFile:
    path = Path(path)
    text = path.read_text()
    if path.suffix.lower() == ".json":
        return parse_generator_json(text, str(path))
    return parse_generator_text(text, str(path))


def code_from_file(gf: GeneratorFile, t: int | None = None, max_sweep: int = DEFAULT_MAX_SWEEP) -> Code:
    ring = build(gf.ring)
    layout = gf.layout if t is None else gf.layout.with_t(t)
    if any(len(r) != layout.N for r in gf.rows):
        raise DimensionMismatch(f"every row must have N = n*b = {layout.N} entries")
    return span(ring, layout, gf.rows, max_sweep=max_sweep)


def ambient_size(code: Code) -> int:
    return code.ring.order ** code.layout.N


__all__ = [
    "ByteLayout", "Code", "GeneratorFile", "DEFAULT_MAX_SWEEP", "span", "dual",
    "inner_product", "spanning_rows", "full_space", "index_chunks", "read_generator_file",
    "parse_generator_text", "parse_generator_json", "code_from_file", "ambient_size",
]
