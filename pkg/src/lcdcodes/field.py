"""Arithmetic in GF(2) and GF(3) and packed vectors over them.

Vectors are stored as a single Python int.  Over GF(2) entry ``i`` is bit
``i``.  Over GF(3) entry ``i`` occupies bits ``2i`` (low) and ``2i+1`` (high)
with 0 -> ``00``, 1 -> ``01``, 2 -> ``10``; the pattern ``11`` never occurs.
All vector operations work on whole words, never entry by entry.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

SUPPORTED_FIELDS = (2, 3)
MAX_LENGTH = 64

# bit 2i set for every i < MAX_LENGTH
_EVEN = int("01" * MAX_LENGTH, 2)


class FieldError(ValueError):
    """Invalid field, element or vector shape."""


def check_field(q: int) -> int:
    if q not in SUPPORTED_FIELDS:
        raise FieldError(f"unsupported field order q={q}; only 2 and 3")
    return q


def _check_element(q: int, a: int) -> None:
    if not 0 <= a < q:
        raise FieldError(f"{a} is not an element of GF({q})")


def fq_arith(q: int, a: int, b: int = 0, kind: str = "add") -> int:
    """Scalar arithmetic in GF(q); ``kind`` is add, sub, mul, neg or inv.

    ``neg`` and ``inv`` are unary and act on ``a``.
    """
    check_field(q)
    _check_element(q, a)
    _check_element(q, b)
    if kind == "add":
        return (a + b) % q
    if kind == "sub":
        return (a - b) % q
    if kind == "mul":
        return (a * b) % q
    if kind == "neg":
        return (-a) % q
    if kind == "inv":
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({q})")
        # every nonzero element of GF(2) and GF(3) is its own inverse
        return a
    raise FieldError(f"unknown operation {kind!r}")


# -- packed GF(3) primitives -------------------------------------------------

def _split3(w: int) -> tuple[int, int]:
    return w & _EVEN, (w >> 1) & _EVEN


def _join3(lo: int, hi: int) -> int:
    return lo | (hi << 1)


def _add3(a: int, b: int) -> int:
    alo, ahi = _split3(a)
    blo, bhi = _split3(b)
    t = (alo | bhi) ^ (ahi | blo)
    return _join3((ahi | bhi) ^ t, (alo | blo) ^ t)


def _neg3(a: int) -> int:
    lo, hi = _split3(a)
    return _join3(hi, lo)


def add_words(q: int, a: int, b: int) -> int:
    return a ^ b if q == 2 else _add3(a, b)


def sub_words(q: int, a: int, b: int) -> int:
    return a ^ b if q == 2 else _add3(a, _neg3(b))


def neg_word(q: int, a: int) -> int:
    return a if q == 2 else _neg3(a)


def scale_word(q: int, a: int, c: int) -> int:
    if c == 0:
        return 0
    if c == 1:
        return a
    return _neg3(a)  # c == 2 over GF(3)


def dot_words(q: int, a: int, b: int) -> int:
    if q == 2:
        return (a & b).bit_count() & 1
    alo, ahi = _split3(a)
    blo, bhi = _split3(b)
    same = (alo & blo) | (ahi & bhi)
    diff = (alo & bhi) | (ahi & blo)
    return (same.bit_count() + 2 * diff.bit_count()) % 3


def weight_word(q: int, a: int) -> int:
    if q == 2:
        return a.bit_count()
    lo, hi = _split3(a)
    return (lo | hi).bit_count()


def entry(q: int, w: int, i: int) -> int:
    if q == 2:
        return (w >> i) & 1
    return (w >> (2 * i)) & 3


def pack(q: int, digits: Sequence[int]) -> int:
    """Pack entries (coordinate 0 first) into a word."""
    w = 0
    shift = 1 if q == 2 else 2
    for i, d in enumerate(digits):
        _check_element(q, d)
        w |= d << (shift * i)
    return w


def unpack(q: int, w: int, n: int) -> list[int]:
    return [entry(q, w, i) for i in range(n)]


def valid_word(q: int, w: int, n: int) -> bool:
    if w < 0:
        return False
    if q == 2:
        return w >> n == 0
    lo, hi = _split3(w)
    return w >> (2 * n) == 0 and lo & hi == 0


# -- vector type ---------------------------------------------------------------

@dataclass(frozen=True)
class FqVector:
    """A vector of length ``n`` over GF(q), packed into ``word``."""

    q: int
    n: int
    word: int = 0

    def __post_init__(self) -> None:
        check_field(self.q)
        if not 0 <= self.n <= MAX_LENGTH:
            raise FieldError(f"length {self.n} outside 0..{MAX_LENGTH}")
        if not valid_word(self.q, self.word, self.n):
            raise FieldError("packed word does not encode a vector of this shape")

    @classmethod
    def from_digits(cls, q: int, digits: Iterable[int]) -> FqVector:
        digits = list(digits)
        return cls(q, len(digits), pack(q, digits))

    @classmethod
    def from_string(cls, q: int, s: str) -> FqVector:
        """Parse a digit string such as ``"2001"``; leftmost char is coordinate 0."""
        try:
            digits = [int(ch) for ch in s]
        except ValueError:
            raise FieldError(f"bad digit string {s!r}") from None
        return cls.from_digits(q, digits)

    @classmethod
    def zero(cls, q: int, n: int) -> FqVector:
        return cls(q, n, 0)

    def digits(self) -> list[int]:
        return unpack(self.q, self.word, self.n)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.n:
            raise IndexError(i)
        return entry(self.q, self.word, i)

    def __len__(self) -> int:
        return self.n

    def __str__(self) -> str:
        return "".join(map(str, self.digits()))

    def _check(self, other: FqVector) -> None:
        if self.q != other.q or self.n != other.n:
            raise FieldError(
                f"shape mismatch: GF({self.q})^{self.n} vs GF({other.q})^{other.n}")

    def __add__(self, other: FqVector) -> FqVector:
        self._check(other)
        return FqVector(self.q, self.n, add_words(self.q, self.word, other.word))

    def __sub__(self, other: FqVector) -> FqVector:
        self._check(other)
        return FqVector(self.q, self.n, sub_words(self.q, self.word, other.word))

    def __neg__(self) -> FqVector:
        return FqVector(self.q, self.n, neg_word(self.q, self.word))

    def scale(self, c: int) -> FqVector:
        _check_element(self.q, c)
        return FqVector(self.q, self.n, scale_word(self.q, self.word, c))

    def is_zero(self) -> bool:
        return self.word == 0


def dot(u: FqVector, v: FqVector) -> int:
    """Standard inner product over GF(q)."""
    u._check(v)
    return dot_words(u.q, u.word, v.word)


def weight(u: FqVector) -> int:
    """Number of nonzero entries."""
    return weight_word(u.q, u.word)
