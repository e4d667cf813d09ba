"""Linear codes over GF(2) and GF(3)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .field import (
    FieldError,
    FqVector,
    add_words,
    check_field,
    entry,
    neg_word,
    pack,
    weight_word,
)
from .matrix import FqMatrix, gram, rank, rref

# q**k above this is refused by anything that walks all codewords
ENUMERATION_LIMIT = 1 << 24


class ResourceError(RuntimeError):
    """A computation would enumerate more codewords than allowed."""


@dataclass(frozen=True)
class WeightEnumerator:
    """Coefficients ``A_0..A_n``; ``A_i`` counts codewords of weight ``i``."""

    coefficients: tuple[int, ...]

    def __getitem__(self, i: int) -> int:
        return self.coefficients[i]

    def __len__(self) -> int:
        return len(self.coefficients)

    def total(self) -> int:
        return sum(self.coefficients)

    def min_weight(self) -> int | None:
        return next((i for i, a in enumerate(self.coefficients) if i and a), None)

    def __str__(self) -> str:
        terms = []
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            mono = "" if i == 0 else ("y" if i == 1 else f"y^{i}")
            coef = str(a) if (a != 1 or i == 0) else ""
            terms.append(coef + mono)
        return "+".join(terms)


def _check_enumerable(q: int, k: int) -> None:
    if q ** k > ENUMERATION_LIMIT:
        raise ResourceError(f"refusing to enumerate {q}^{k} codewords")


class LinearCode:
    """An ``[n, k]`` code held by its reduced row-echelon generator matrix.

    Two instances spanning the same subspace compare equal.  Derived data
    (weight enumerators, hull dimension, dual) is computed on first use and
    memoized; filling a cache twice from racing threads is harmless.
    """

    def __init__(self, generator: FqMatrix):
        reduced, pivots = rref(generator)
        self.q = generator.q
        self.n = generator.n
        self.k = len(pivots)
        self.pivots = tuple(pivots)
        self.G = FqMatrix(self.q, self.k, self.n, reduced.rows[: self.k])

    # -- construction ----------------------------------------------------

    @classmethod
    def from_rows(cls, q: int, rows: Sequence[Sequence[int]] | Sequence[str], n: int | None = None) -> LinearCode:
        if rows and isinstance(rows[0], str):
            return cls(FqMatrix.from_strings(q, rows))
        return cls(FqMatrix.from_lists(q, rows, n))

    @classmethod
    def zero(cls, q: int, n: int) -> LinearCode:
        return cls(FqMatrix.zeros(q, 0, n))

    @classmethod
    def full(cls, q: int, n: int) -> LinearCode:
        return cls(FqMatrix.identity(q, n))

    # -- identity --------------------------------------------------------

    def _ident(self) -> tuple:
        return (self.q, self.n, self.G.rows)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LinearCode) and self._ident() == other._ident()

    def __hash__(self) -> int:
        return hash(self._ident())

    def __repr__(self) -> str:
        rows = " ".join(self.G.to_strings())
        return f"LinearCode(q={self.q}, n={self.n}, k={self.k}, G=[{rows}])"

    # -- codewords -------------------------------------------------------

    def codewords(self) -> Iterator[int]:
        """All ``q**k`` codewords as packed words.

        Walks a modular q-ary Gray code, so each step adds one generator
        row to the previous codeword.
        """
        _check_enumerable(self.q, self.k)
        q, k, rows = self.q, self.k, self.G.rows
        c = 0
        yield c
        for t in range(q ** k - 1):
            # digit to bump = number of trailing (q-1) digits of t
            i = 0
            while t % q == q - 1:
                t //= q
                i += 1
            c = add_words(q, c, rows[i])
            yield c

    def codeword_array(self) -> np.ndarray:
        """``q**k x n`` array of codewords, messages in lexicographic order."""
        _check_enumerable(self.q, self.k)
        if self.k == 0:
            return np.zeros((1, self.n), dtype=np.uint8)
        msgs = np.array(list(itertools.product(range(self.q), repeat=self.k)), dtype=np.int64)
        return ((msgs @ self.G.to_array().astype(np.int64)) % self.q).astype(np.uint8)

    def contains(self, v: FqVector | Sequence[int]) -> bool:
        word = v.word if isinstance(v, FqVector) else pack(self.q, list(v))
        for r, p in zip(self.G.rows, self.pivots):
            e = entry(self.q, word, p)
            if e:
                word = add_words(self.q, word, r if e == self.q - 1 else neg_word(self.q, r))
        return word == 0

    # -- derived data ----------------------------------------------------

    def dual(self) -> LinearCode:
        return self._dual

    @cached_property
    def _dual(self) -> LinearCode:
        q, n = self.q, self.n
        shift = 1 if q == 2 else 2
        free = [j for j in range(n) if j not in self.pivots]
        rows = []
        for j in free:
            w = 1 << (shift * j)
            for r, p in zip(self.G.rows, self.pivots):
                e = entry(q, r, j)
                if e:
                    w |= ((-e) % q) << (shift * p)
            rows.append(w)
        d = LinearCode(FqMatrix(q, len(rows), n, tuple(rows)))
        d.__dict__["_dual"] = self
        return d

    @cached_property
    def hull_dim(self) -> int:
        """Dimension of the hull ``C ∩ C⊥``, i.e. ``k - rank(G G^T)``."""
        return self.k - rank(gram(self.G))

    def is_lcd(self) -> bool:
        return self.hull_dim == 0

    @cached_property
    def weight_enumerator(self) -> WeightEnumerator:
        counts = [0] * (self.n + 1)
        for c in self.codewords():
            counts[weight_word(self.q, c)] += 1
        return WeightEnumerator(tuple(counts))

    @property
    def min_weight(self) -> int:
        if self.k == 0:
            raise FieldError("minimum weight of the zero code is undefined")
        return self.weight_enumerator.min_weight()

    @property
    def dual_min_weight(self) -> int:
        return self.dual().min_weight

    # -- transformations -------------------------------------------------

    def extend(self) -> LinearCode:
        """Append one zero coordinate."""
        return LinearCode(FqMatrix(self.q, self.k, self.n + 1, self.G.rows))

    def transform(self, perm: Sequence[int], scales: Sequence[int] | None = None) -> LinearCode:
        """Image under a monomial map: coordinate ``i`` goes to ``perm[i]``
        after multiplication by ``scales[i]``."""
        if sorted(perm) != list(range(self.n)):
            raise FieldError("perm is not a permutation of the coordinates")
        scales = scales if scales is not None else [1] * self.n
        out = []
        for row in self.G.to_lists():
            new = [0] * self.n
            for i, x in enumerate(row):
                new[perm[i]] = (x * scales[i]) % self.q
            out.append(new)
        return LinearCode(FqMatrix.from_lists(self.q, out, self.n))


# -- functional interface ---------------------------------------------------

def from_standard_form(q: int, k: int, a: FqMatrix) -> LinearCode:
    """The code generated by ``(I_k | A)``."""
    check_field(q)
    if a.k != k or a.q != q:
        raise FieldError(f"A must be a {k}-row matrix over GF({q})")
    return LinearCode(FqMatrix.identity(q, k).hstack(a))


def dual(c: LinearCode) -> LinearCode:
    return c.dual()


def is_lcd(c: LinearCode) -> bool:
    return c.is_lcd()


def hull_dim(c: LinearCode) -> int:
    return c.hull_dim


def weight_enumerator(c: LinearCode) -> WeightEnumerator:
    return c.weight_enumerator


def min_weight(c: LinearCode) -> int:
    return c.min_weight


def extend(c: LinearCode) -> LinearCode:
    return c.extend()
