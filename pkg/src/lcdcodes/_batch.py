"""Vectorized screening of candidate generator matrices.

Each batch holds ``B`` matrices ``(I_k | A)`` as a ``(B, k, n)`` uint8 array.
The screen keeps LCD candidates and labels each with an equivalence
invariant: the weight enumerator plus a 64-bit hash of a few rounds of
color refinement on the codeword/coordinate incidence structure, seeded by
pairwise codeword overlaps.  Equal codes always get equal labels; unequal
labels prove inequivalence.
"""

from __future__ import annotations

import itertools

import numpy as np

_U = np.uint64
_RNG = np.random.default_rng(0x1CD)
_SALT = _RNG.integers(0, np.iinfo(np.uint64).max, size=(8, 1024), dtype=np.uint64, endpoint=True)


def _mix(x: np.ndarray) -> np.ndarray:
    x = x ^ (x >> _U(30))
    x = x * _U(0xBF58476D1CE4E5B9)
    x = x ^ (x >> _U(27))
    x = x * _U(0x94D049BB133111EB)
    return x ^ (x >> _U(31))


def messages(q: int, k: int) -> np.ndarray:
    return np.array(list(itertools.product(range(q), repeat=k)), dtype=np.int32).reshape(q ** k, k)


def batch_nonsingular(m: np.ndarray, q: int) -> np.ndarray:
    """Which of the ``(B, k, k)`` matrices are invertible over GF(q)."""
    m = np.array(m, dtype=np.int32) % q
    b, k, _ = m.shape
    ok = np.ones(b, dtype=bool)
    rows = np.arange(b)
    for c in range(k):
        nz = m[:, c:, c] != 0
        has = nz.any(axis=1)
        ok &= has
        piv = c + nz.argmax(axis=1)
        top = m[rows, c].copy()
        m[:, c] = m[rows, piv]
        m[rows, piv] = top
        if q == 3:
            m[:, c] = (m[:, c] * m[:, c, c : c + 1]) % 3  # x * x = 1 for x != 0
        f = m[:, c + 1 :, c : c + 1]
        m[:, c + 1 :] = (m[:, c + 1 :] - f * m[:, None, c]) % q
    return ok


def batch_size(q: int, k: int) -> int:
    nq = q ** k
    return max(32, min(4096, (1 << 20) // (nq * nq)))


class Screen:
    """Screens batches of ``A`` blocks for one ``(q, n, k)``."""

    def __init__(self, q: int, n: int, k: int):
        self.q, self.n, self.k = q, n, k
        self.msgs = messages(q, k).astype(np.float32)
        self.eye = np.eye(k, dtype=np.uint8)
        r = n + 1
        self.table = np.random.default_rng((0x7AB1E, n)).integers(0, np.iinfo(np.uint64).max, size=r ** 3, dtype=np.uint64, endpoint=True)

    def generators(self, a: np.ndarray) -> np.ndarray:
        b = a.shape[0]
        return np.concatenate([np.broadcast_to(self.eye, (b, self.k, self.k)), a], axis=2)

    def lcd_mask(self, a: np.ndarray) -> np.ndarray:
        a32 = a.astype(np.int32)
        gram = np.eye(self.k, dtype=np.int32)[None] + a32 @ a32.transpose(0, 2, 1)
        return batch_nonsingular(gram, self.q)

    def invariants(self, a: np.ndarray) -> np.ndarray:
        """``(B, n + 2)`` uint64 labels for the codes generated by ``(I | A)``."""
        q, n = self.q, self.n
        g = self.generators(a).astype(np.float32)
        words = np.rint(self.msgs[None] @ g).astype(np.int8) % q  # (B, Q, n)
        supp = words != 0
        sf = supp.astype(np.float32)
        wt = supp.sum(axis=2, dtype=np.int32)  # (B, Q)
        we = (wt[:, :, None] == np.arange(n + 1)).sum(axis=1).astype(np.uint64)

        # per codeword: multiset over partners of (weight, overlap, agreement)
        r = n + 1
        pair = sf @ sf.transpose(0, 2, 1) * r
        if q == 3:
            x1 = (words == 1).astype(np.float32)
            x2 = (words == 2).astype(np.float32)
            pair += x1 @ x1.transpose(0, 2, 1)
            pair += x2 @ x2.transpose(0, 2, 1)
        idx = pair.astype(np.int32) + (wt * (r * r))[:, None, :]
        cw = _mix(self.table[idx].sum(axis=2, dtype=np.uint64) + _SALT[2][wt])

        su = supp.astype(np.uint64)
        for rnd in range(2):
            coord = _mix((su * cw[:, :, None]).sum(axis=1, dtype=np.uint64) + _SALT[3][rnd])
            cw = _mix(cw + (su * coord[:, None, :]).sum(axis=2, dtype=np.uint64))
        cw.sort(axis=1)
        coord.sort(axis=1)
        h = (cw * _SALT[4][: cw.shape[1]]).sum(axis=1, dtype=np.uint64)
        h = _mix(h + (coord * _SALT[5][:n]).sum(axis=1, dtype=np.uint64))
        return np.concatenate([we, h[:, None]], axis=1)


def first_occurrences(keys: np.ndarray) -> list[int]:
    """Indices of the first row of each distinct key, in increasing order."""
    if len(keys) == 0:
        return []
    rows = np.ascontiguousarray(keys).view(np.dtype((np.void, keys.dtype.itemsize * keys.shape[1]))).ravel()
    _, idx = np.unique(rows, return_index=True)
    return sorted(idx.tolist())
