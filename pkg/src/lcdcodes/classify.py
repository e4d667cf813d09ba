"""Exhaustive classification of LCD codes, certified by the mass formulas.

Candidates ``(I_k | A)`` are streamed row-wise (rows of ``A`` non-decreasing)
or column-wise (nonzero columns non-decreasing; the codes whose dual has
minimum weight 1 are then lifted from length ``n - 1``).  Non-LCD candidates
are dropped by a batched Gram determinant; survivors are bucketed by a cheap
equivalence invariant and only the first code of each new bucket is
canonized.  Buckets with distinct invariants are inequivalent, so once the
accumulated mass equals ``T_q(n, k)`` the list is provably complete.  If a
stream runs dry short of the target (two classes shared an invariant), a
second pass canonizes every candidate in the known buckets.
"""

from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import _batch
from .canon import CanonicalKey, canonize
from .code import LinearCode, WeightEnumerator
from .field import check_field
from .mass import class_mass, mass
from .matrix import FqMatrix

log = logging.getLogger(__name__)

STRATEGIES = ("auto", "rowwise", "colwise+lift", "dual")


class ClassificationError(RuntimeError):
    """The mass identity failed: a canonical form or group order is wrong."""


@dataclass
class ClassRecord:
    code: LinearCode
    key: CanonicalKey | None  # None for records read back from a database
    aut_order: int
    d: int
    d_dual: int
    weight_enumerator: WeightEnumerator

    @classmethod
    def from_code(cls, code: LinearCode) -> ClassRecord:
        key, aut = canonize(code)
        return cls(code, key, aut.order, code.min_weight, code.dual_min_weight,
                   code.weight_enumerator)


@dataclass
class ClassificationResult:
    q: int
    n: int
    k: int
    classes: list[ClassRecord]
    accumulated_mass: int
    target_mass: int
    complete: bool
    strategy: str
    stats: dict = field(default_factory=dict)

    @property
    def N(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class TableRow:
    n: int
    k: int
    N: int
    by_d: dict[int, int]
    by_d_dual: dict[int, int]


# -- candidate streams ----------------------------------------------------------

def _digits_table(q: int, m: int, values) -> np.ndarray:
    """Vectors for the given base-q integers, most significant coordinate first."""
    values = np.asarray(values, dtype=np.int64)
    out = np.empty((len(values), m), dtype=np.uint8)
    for j in range(m):
        out[:, m - 1 - j] = (values // q ** j) % q
    return out


def _column_values(q: int, k: int, normalize: bool) -> list[int]:
    vals = range(1, q ** k)
    if not normalize:
        return list(vals)
    # leading (most significant) nonzero digit equal to 1
    out = []
    for v in vals:
        lead = v
        while lead >= q:
            lead //= q
        if lead == 1:
            out.append(v)
    return out


def _row_action(q: int, k: int, values: list[int], normalize: bool) -> np.ndarray:
    """``action[g, i]``: index of the column ``values[i]`` after row operation ``g``.

    The operations are row permutations, and for q = 3 also row negations;
    both are realized on codes by monomial maps.
    """
    index = {v: i for i, v in enumerate(values)}
    cols = _digits_table(q, k, values).astype(np.int64)
    weights = q ** np.arange(k - 1, -1, -1)
    signs = [(1,)] if q == 2 else [(1,) + s for s in itertools.product((1, 2), repeat=k - 1)]
    rows = []
    for perm in itertools.permutations(range(k)):
        for sg in signs:
            new = np.empty_like(cols)
            new[:, list(perm)] = (cols * np.array(sg)) % q
            if normalize:
                lead = new[np.arange(len(new)), (new != 0).argmax(axis=1)]
                new = (new * lead[:, None]) % q  # lead * lead = 1
            rows.append([index[int(v)] for v in new @ weights])
    return np.array(rows, dtype=np.int16 if len(values) < 32000 else np.int32)


class _Stream:
    """Sorted multisets of rows (``rowwise``) or columns (``colwise``) of ``A``."""

    def __init__(self, q: int, n: int, k: int, mode: str, normalize: bool = False,
                 orderly: bool = False):
        self.q, self.n, self.k, self.m = q, n, k, n - k
        self.mode = mode
        self.action = None
        if mode == "rowwise":
            self.values = list(range(q ** self.m))
            self.size = k
            self.table = _digits_table(q, self.m, self.values)
        elif mode == "colwise":
            self.values = _column_values(q, k, normalize)
            self.size = self.m
            self.table = _digits_table(q, k, self.values)
            if orderly:
                self.action = _row_action(q, k, self.values, normalize)
        else:
            raise ValueError(mode)

    def __len__(self) -> int:
        v = len(self.values)
        return math.comb(v + self.size - 1, self.size)

    def units(self) -> list[int]:
        """Work units: index of the first (smallest) element of the multiset."""
        if not self.size:
            return [0]
        if self.action is None:
            return list(range(len(self.values)))
        return [u for u in range(len(self.values)) if self.orbit_min[u] == u]

    @cached_property
    def orbit_min(self) -> np.ndarray:
        return self.action.min(axis=0)

    def unit_combos(self, u: int) -> Iterator[tuple[int, ...]]:
        if self.size == 0:
            yield ()
            return
        pool = range(u, len(self.values))
        if self.action is not None:
            # an element whose orbit reaches below u makes the multiset non-minimal
            pool = [v for v in pool if self.orbit_min[v] >= u]
        for rest in itertools.combinations_with_replacement(pool, self.size - 1):
            yield (u,) + rest

    def minimal(self, combos: np.ndarray) -> np.ndarray:
        """Mask of column multisets that are least in their orbit under
        signed row permutations of ``A``; every orbit keeps its minimum."""
        if self.action is None:
            return np.ones(len(combos), dtype=bool)
        img = self.action[:, combos]  # (G, B, m)
        img.sort(axis=2)
        diff = img - combos[None].astype(img.dtype)
        nz = diff != 0
        first = nz.argmax(axis=2)
        lead = np.take_along_axis(diff, first[:, :, None], axis=2)[:, :, 0]
        return ~((lead < 0) & nz.any(axis=2)).any(axis=0)

    def blocks(self, combos: np.ndarray) -> np.ndarray:
        """``(B, k, n-k)`` A-blocks for a ``(B, size)`` array of value indices."""
        vecs = self.table[combos]
        if self.mode == "rowwise":
            return vecs
        return vecs.transpose(0, 2, 1)

    def matrix(self, combo) -> FqMatrix:
        return FqMatrix.from_array(self.q, self.blocks(np.array([combo]))[0])


def enumerate_rowwise(q: int, n: int, k: int) -> Iterator[FqMatrix]:
    """All ``k x (n-k)`` matrices whose rows are non-decreasing."""
    _check_nk(n, k)
    s = _Stream(q, n, k, "rowwise")
    for u in s.units():
        for combo in s.unit_combos(u):
            yield s.matrix(combo)


def enumerate_colwise(q: int, n: int, k: int, normalize: bool = False) -> Iterator[FqMatrix]:
    """All ``k x (n-k)`` matrices whose columns are nonzero and non-decreasing.

    With ``normalize`` (useful for q = 3) each column's leading nonzero entry
    is 1; scaling a column of ``A`` is a monomial transformation.
    """
    _check_nk(n, k)
    s = _Stream(q, n, k, "colwise", normalize)
    for u in s.units():
        for combo in s.unit_combos(u):
            yield s.matrix(combo)


def _check_nk(n: int, k: int) -> None:
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got n={n}, k={k}")


def _chunk_size(stream: _Stream) -> int:
    g = 1 if stream.action is None else len(stream.action)
    return max(256, min(1 << 14, (1 << 23) // (g * max(stream.size, 1))))


def _screened(stream: _Stream, screen: _batch.Screen, chunk: list[tuple]):
    """A-blocks and stream indices of the LCD, orbit-minimal candidates."""
    combos = np.array(chunk, dtype=np.int64).reshape(len(chunk), stream.size)
    a = stream.blocks(combos)
    idx = np.flatnonzero(stream.minimal(combos))
    if len(idx):
        idx = idx[screen.lcd_mask(a[idx])]
    return a[idx], idx


def _scan(stream: _Stream, u: int) -> Iterator[tuple[list[tuple[bytes, tuple]], int, int]]:
    """Chunks of (invariant, combo) pairs for the LCD candidates of one unit.

    Within a chunk only the first candidate of each invariant is reported.
    """
    screen = _batch.Screen(stream.q, stream.n, stream.k)
    bs = _batch.batch_size(stream.q, stream.k)
    it = stream.unit_combos(u)
    while chunk := list(itertools.islice(it, _chunk_size(stream))):
        a, idx = _screened(stream, screen, chunk)
        out = []
        if len(idx):
            keys = np.concatenate([screen.invariants(a[i:i + bs]) for i in range(0, len(idx), bs)])
            for i in _batch.first_occurrences(keys):
                out.append((keys[i].tobytes(), chunk[idx[i]]))
        yield out, len(chunk), len(idx)


def _scan_unit_all(args) -> tuple[list, int, int]:
    stream, u = args
    seen: set[bytes] = set()
    found, total, lcd = [], 0, 0
    for out, t, c in _scan(stream, u):
        total += t
        lcd += c
        for kb, combo in out:
            if kb not in seen:
                seen.add(kb)
                found.append((kb, combo))
    return found, total, lcd


# -- driver ---------------------------------------------------------------------

class _Accumulator:
    def __init__(self, q: int, n: int, k: int):
        self.q, self.n, self.k = q, n, k
        self.target = mass(q, n, k)
        self.total = 0
        self.by_key: dict[CanonicalKey, ClassRecord] = {}
        self.buckets: dict[bytes, list[CanonicalKey]] = {}
        self.canonized = 0

    @property
    def done(self) -> bool:
        return self.total == self.target

    def add(self, code: LinearCode, bucket: bytes | None = None) -> bool:
        """Insert a code if its class is new; True when it was."""
        self.canonized += 1
        rec = ClassRecord.from_code(code)
        if rec.key in self.by_key:
            if bucket is not None and bucket not in self.buckets:
                raise ClassificationError("invariant separated two equivalent codes")
            return False
        if not code.is_lcd():
            raise ClassificationError(f"non-LCD code offered: {code!r}")
        self.by_key[rec.key] = rec
        if bucket is not None:
            self.buckets.setdefault(bucket, []).append(rec.key)
        self.total += class_mass(self.q, self.n, rec.aut_order)
        if self.total > self.target:
            raise ClassificationError(
                f"mass overshoot at (q,n,k)=({self.q},{self.n},{self.k}): "
                f"{self.total} > {self.target}")
        return True


def _choose_strategy(q: int, n: int, k: int) -> str:
    if n - 1 <= k:
        return "rowwise"
    row = len(_Stream(q, n, k, "rowwise"))
    col = len(_Stream(q, n, k, "colwise", normalize=(q == 3)))
    return "colwise+lift" if col < row else "rowwise"


Provider = Callable[[int, int, int], ClassificationResult]


def classify(
    q: int,
    n: int,
    k: int,
    strategy: str = "auto",
    *,
    shorter: Provider | None = None,
    workers: int = 1,
    cache: dict | None = None,
) -> ClassificationResult:
    """Classify LCD ``[n, k]`` codes over GF(q) up to equivalence.

    ``shorter(q, n - 1, k)`` supplies the length ``n - 1`` classification for
    the ``colwise+lift`` strategy; by default it is computed recursively
    (and memoized in ``cache`` when given).  Codes with ``k > n/2`` are
    obtained by dualizing the classification of ``[n, n-k]`` codes.
    """
    check_field(q)
    _check_nk(n, k)
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}")
    if cache is not None and (q, n, k) in cache:
        return cache[(q, n, k)]

    if 2 * k > n or strategy == "dual":
        if 2 * k <= n:
            raise ValueError("the dual strategy needs k > n/2")
        base = classify(q, n, n - k, shorter=shorter, workers=workers, cache=cache)
        result = _dualize(base)
    else:
        if shorter is None:
            def shorter(q_, n_, k_):
                return classify(q_, n_, k_, workers=workers, cache=cache)
        if strategy == "auto":
            strategy = _choose_strategy(q, n, k)
        result = _classify_direct(q, n, k, strategy, shorter, workers)
    if cache is not None:
        cache[(q, n, k)] = result
    return result


def _dualize(base: ClassificationResult) -> ClassificationResult:
    q, n, k = base.q, base.n, base.n - base.k
    acc = _Accumulator(q, n, k)
    for rec in base.classes:
        acc.add(rec.code.dual())
    return _finish(acc, "dual", {"from": (base.n, base.k)})


def _classify_direct(q, n, k, strategy, shorter, workers) -> ClassificationResult:
    acc = _Accumulator(q, n, k)
    stats = {"lifted": 0}
    if strategy == "colwise+lift":
        if n - 1 == k:
            lifted = [LinearCode.full(q, k).extend()]
        else:
            db = shorter(q, n - 1, k)
            if not db.complete:
                raise ValueError(f"classification of ({q},{n - 1},{k}) is incomplete")
            lifted = lift_from_shorter(db.classes)
        for code in lifted:
            acc.add(code)
        stats["lifted"] = len(lifted)
        stream = _Stream(q, n, k, "colwise", normalize=(q == 3), orderly=True)
    elif strategy == "rowwise":
        stream = _Stream(q, n, k, "rowwise")
    else:
        raise ValueError(f"strategy {strategy!r} cannot run directly")
    stats["stream_size"] = len(stream)

    if not acc.done:
        _run_stream(acc, stream, workers, stats)
    if not acc.done:
        log.info("(%d,%d,%d): invariant collision suspected, exact pass", q, n, k)
        _exact_pass(acc, stream, stats)
    if not acc.done:
        raise ClassificationError(
            f"stream exhausted at mass {acc.total} < {acc.target} for ({q},{n},{k})")
    return _finish(acc, strategy, stats)


def _unit_results(stream: _Stream, workers: int, stats: dict) -> Iterator[list]:
    units = stream.units()
    if workers <= 1:
        for u in units:
            seen: set[bytes] = set()
            for out, t, c in _scan(stream, u):
                stats["scanned"] = stats.get("scanned", 0) + t
                stats["lcd"] = stats.get("lcd", 0) + c
                fresh = [(kb, cb) for kb, cb in out if kb not in seen]
                seen.update(kb for kb, _ in fresh)
                yield fresh
        return
    with ProcessPoolExecutor(max_workers=workers) as ex:
        try:
            for found, t, c in ex.map(_scan_unit_all, [(stream, u) for u in units]):
                stats["scanned"] = stats.get("scanned", 0) + t
                stats["lcd"] = stats.get("lcd", 0) + c
                yield found
        finally:
            ex.shutdown(wait=True, cancel_futures=True)


def _run_stream(acc: _Accumulator, stream: _Stream, workers: int, stats: dict) -> None:
    for batch in _unit_results(stream, workers, stats):
        for kb, combo in batch:
            if kb in acc.buckets:
                continue
            code = LinearCode(FqMatrix.identity(stream.q, stream.k).hstack(stream.matrix(combo)))
            acc.add(code, kb)
            if acc.done:
                return


def _exact_pass(acc: _Accumulator, stream: _Stream, stats: dict) -> None:
    screen = _batch.Screen(stream.q, stream.n, stream.k)
    bs = _batch.batch_size(stream.q, stream.k)
    eye = FqMatrix.identity(stream.q, stream.k)
    stats["exact_pass"] = True
    for u in stream.units():
        it = stream.unit_combos(u)
        while chunk := list(itertools.islice(it, _chunk_size(stream))):
            a, idx = _screened(stream, screen, chunk)
            for lo in range(0, len(idx), bs):
                keys = screen.invariants(a[lo:lo + bs])
                for i, row in zip(idx[lo:lo + bs], keys):
                    code = LinearCode(eye.hstack(stream.matrix(chunk[i])))
                    acc.add(code, row.tobytes())
                    if acc.done:
                        return


def _finish(acc: _Accumulator, strategy: str, stats: dict) -> ClassificationResult:
    stats["canonized"] = acc.canonized
    return ClassificationResult(
        acc.q, acc.n, acc.k, list(acc.by_key.values()), acc.total, acc.target,
        acc.done, strategy, stats)


def lift_from_shorter(db: list[ClassRecord]) -> list[LinearCode]:
    """Append a zero coordinate to every class representative of length ``n - 1``.

    For a complete classification ``db`` this gives one code from each class
    of LCD ``[n, k]`` codes whose dual has minimum weight 1.
    """
    return [rec.code.extend() for rec in db]


def refine_by_distance(result: ClassificationResult) -> TableRow:
    if not result.complete:
        raise ValueError("classification is incomplete")
    by_d: dict[int, int] = {}
    by_dd: dict[int, int] = {}
    for rec in result.classes:
        by_d[rec.d] = by_d.get(rec.d, 0) + 1
        by_dd[rec.d_dual] = by_dd.get(rec.d_dual, 0) + 1
    return TableRow(result.n, result.k, result.N, dict(sorted(by_d.items())),
                    dict(sorted(by_dd.items())))


def smallest_aut(results: list[ClassificationResult]) -> dict[tuple[int, int], int]:
    return {(r.n, r.k): min(rec.aut_order for rec in r.classes) for r in results}
