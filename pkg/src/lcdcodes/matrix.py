"""Dense matrices over GF(2) and GF(3) with packed rows."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .field import (
    MAX_LENGTH,
    FieldError,
    FqVector,
    add_words,
    check_field,
    dot_words,
    entry,
    neg_word,
    pack,
    scale_word,
    sub_words,
    unpack,
    valid_word,
)


@dataclass(frozen=True)
class FqMatrix:
    """A ``k x n`` matrix over GF(q); ``rows`` holds one packed word per row."""

    q: int
    k: int
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        check_field(self.q)
        if not (0 <= self.k <= MAX_LENGTH and 0 <= self.n <= MAX_LENGTH):
            raise FieldError(f"matrix shape {self.k}x{self.n} exceeds {MAX_LENGTH}")
        if len(self.rows) != self.k:
            raise FieldError("row count does not match k")
        for w in self.rows:
            if not valid_word(self.q, w, self.n):
                raise FieldError("row word does not encode a length-n vector")

    @classmethod
    def from_lists(cls, q: int, rows: Sequence[Sequence[int]], n: int | None = None) -> FqMatrix:
        rows = [list(r) for r in rows]
        if n is None:
            n = len(rows[0]) if rows else 0
        if any(len(r) != n for r in rows):
            raise FieldError("ragged rows")
        return cls(q, len(rows), n, tuple(pack(q, r) for r in rows))

    @classmethod
    def from_strings(cls, q: int, rows: Sequence[str]) -> FqMatrix:
        return cls.from_lists(q, [[int(c) for c in s] for s in rows])

    @classmethod
    def from_array(cls, q: int, a) -> FqMatrix:
        a = np.asarray(a, dtype=np.int64) % q
        k, n = a.shape
        return cls.from_lists(q, a.tolist(), n)

    @classmethod
    def zeros(cls, q: int, k: int, n: int) -> FqMatrix:
        return cls(q, k, n, (0,) * k)

    @classmethod
    def identity(cls, q: int, k: int) -> FqMatrix:
        shift = 1 if q == 2 else 2
        return cls(q, k, k, tuple(1 << (shift * i) for i in range(k)))

    def to_lists(self) -> list[list[int]]:
        return [unpack(self.q, w, self.n) for w in self.rows]

    def to_array(self) -> np.ndarray:
        return np.array(self.to_lists(), dtype=np.uint8).reshape(self.k, self.n)

    def to_strings(self) -> list[str]:
        return ["".join(map(str, r)) for r in self.to_lists()]

    def row(self, i: int) -> FqVector:
        return FqVector(self.q, self.n, self.rows[i])

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return entry(self.q, self.rows[i], j)

    def transpose(self) -> FqMatrix:
        if self.k == 0:
            return FqMatrix.zeros(self.q, self.n, 0)
        return FqMatrix.from_lists(self.q, [list(c) for c in zip(*self.to_lists())], self.k)

    def hstack(self, other: FqMatrix) -> FqMatrix:
        if self.q != other.q or self.k != other.k:
            raise FieldError("hstack needs equal field and row count")
        shift = (1 if self.q == 2 else 2) * self.n
        return FqMatrix(self.q, self.k, self.n + other.n,
                        tuple(a | (b << shift) for a, b in zip(self.rows, other.rows)))

    def __str__(self) -> str:
        return "\n".join(self.to_strings())


def rref(m: FqMatrix) -> tuple[FqMatrix, list[int]]:
    """Reduced row-echelon form and the (increasing) pivot columns.

    Pivots are taken leftmost-first; zero rows are kept at the bottom so the
    result has the same shape as the input.
    """
    q = m.q
    rows = list(m.rows)
    pivots: list[int] = []
    r = 0
    for c in range(m.n):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if entry(q, rows[i], c)), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        if entry(q, rows[r], c) == 2:
            rows[r] = neg_word(q, rows[r])
        piv = rows[r]
        for i in range(len(rows)):
            if i != r:
                e = entry(q, rows[i], c)
                if e:
                    rows[i] = sub_words(q, rows[i], scale_word(q, piv, e))
        pivots.append(c)
        r += 1
    return FqMatrix(q, m.k, m.n, tuple(rows)), pivots


def rank(m: FqMatrix) -> int:
    return len(rref(m)[1])


def gram(g: FqMatrix) -> FqMatrix:
    """The ``k x k`` product ``G G^T``."""
    q = g.q
    return FqMatrix.from_lists(
        q, [[dot_words(q, a, b) for b in g.rows] for a in g.rows], g.k)


def is_nonsingular(m: FqMatrix) -> bool:
    if m.k != m.n:
        raise FieldError(f"nonsingularity needs a square matrix, got {m.k}x{m.n}")
    return rank(m) == m.k


def matmul(a: FqMatrix, b: FqMatrix) -> FqMatrix:
    """Product ``a @ b`` computed as row combinations of ``b``."""
    if a.q != b.q or a.n != b.k:
        raise FieldError("incompatible shapes for product")
    q = a.q
    out = []
    for w in a.rows:
        acc = 0
        for i, brow in enumerate(b.rows):
            e = entry(q, w, i)
            if e:
                acc = add_words(q, acc, scale_word(q, brow, e))
        out.append(acc)
    return FqMatrix(q, a.k, b.n, tuple(out))
