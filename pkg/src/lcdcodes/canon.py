"""Code equivalence through canonical labeling of colored (di)graphs.

A ternary code is encoded as the digraph with one vertex per codeword and
two vertices ``(j, 1), (j, 2)`` per coordinate, arcs ``c -> (j, c_j)`` for
the nonzero entries of each codeword and the 2-cycles ``(j, 1) <-> (j, 2)``.
Its automorphisms are exactly the monomial automorphisms of the code.  A
binary code uses the bipartite codeword/coordinate incidence graph.  In both
cases codeword vertices are colored by weight.

Canonical labeling is individualization-refinement: equitable refinement,
branching on the smallest non-singleton cell, pruning by refinement traces
and by automorphisms found at equivalent leaves.  The canonical form is the
least leaf (trace, certificate); the automorphism group order is the product
of the first-path orbit lengths.
"""

from __future__ import annotations

import math
from array import array
from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .code import LinearCode, _check_enumerable
from .field import FieldError


@dataclass(frozen=True)
class ColoredGraph:
    n_vertices: int
    arcs: tuple[tuple[int, int], ...]
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.colors) != self.n_vertices:
            raise ValueError("one color per vertex required")
        for u, v in self.arcs:
            if not (0 <= u < self.n_vertices and 0 <= v < self.n_vertices):
                raise ValueError(f"arc ({u}, {v}) references a missing vertex")


@dataclass(frozen=True)
class CanonicalKey:
    """Certificate of an equivalence class of codes with fixed (q, n, k)."""

    data: bytes

    def hex(self) -> str:
        return self.data.hex()


@dataclass(frozen=True)
class AutInfo:
    order: int


@dataclass(frozen=True)
class LabelingResult:
    certificate: bytes
    labeling: tuple[int, ...]  # canonical position -> vertex
    generators: tuple[tuple[int, ...], ...]
    group_order: int
    nodes: int


def build_graph(c: LinearCode) -> ColoredGraph:
    _check_enumerable(c.q, c.k)
    words = c.codeword_array()
    nc, n = words.shape
    weights = (words != 0).sum(axis=1).tolist()
    arcs = []
    if c.q == 2:
        colors = weights + [n + 1] * n
        for ci, row in enumerate(words.tolist()):
            for j, x in enumerate(row):
                if x:
                    arcs.append((ci, nc + j))
                    arcs.append((nc + j, ci))
    else:
        colors = weights + [n + 1] * (2 * n)
        for ci, row in enumerate(words.tolist()):
            for j, x in enumerate(row):
                if x:
                    arcs.append((ci, nc + 2 * j + x - 1))
        for j in range(n):
            arcs.append((nc + 2 * j, nc + 2 * j + 1))
            arcs.append((nc + 2 * j + 1, nc + 2 * j))
    return ColoredGraph(len(colors), tuple(arcs), tuple(colors))


# -- canonical labeling ------------------------------------------------------

_IN = 1 << 20  # weight of an in-arc in the refinement counts


class _Leaf:
    __slots__ = ("traces", "cert", "lab", "path")

    def __init__(self, traces, cert, lab, path):
        self.traces = traces
        self.cert = cert
        self.lab = lab
        self.path = path


class _Search:
    def __init__(self, g: ColoredGraph):
        self.n = g.n_vertices
        self.out_adj: list[list[int]] = [[] for _ in range(self.n)]
        self.in_adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in g.arcs:
            self.out_adj[u].append(v)
            self.in_adj[v].append(u)
        self.colors = g.colors
        self.gens: list[list[int]] = []
        self.first: _Leaf | None = None
        self.best: _Leaf | None = None
        self.nodes = 0

    # partition: lab[pos] = vertex, start[v] = first position of v's cell,
    # end[s] = one past the last position of the cell starting at s

    def _refine(self, lab, start, end, queue):
        out_adj, in_adj = self.out_adj, self.in_adj
        trace = []
        queue = deque(queue)
        inq = set(queue)
        while queue:
            w = queue.popleft()
            inq.discard(w)
            counts: dict[int, int] = {}
            get = counts.get
            for p in range(w, end[w]):
                x = lab[p]
                for u in in_adj[x]:
                    counts[u] = get(u, 0) + 1
                for u in out_adj[x]:
                    counts[u] = get(u, 0) + _IN
            for s in sorted({start[u] for u in counts}):
                e = end[s]
                if e - s == 1:
                    continue
                cell = lab[s:e]
                keys = [get(v, 0) for v in cell]
                k0 = keys[0]
                if all(k == k0 for k in keys):
                    continue
                order = sorted(range(e - s), key=keys.__getitem__)
                frags = []
                prev = None
                for idx, i in enumerate(order):
                    k = keys[i]
                    if k != prev:
                        frags.append([s + idx, k])
                        prev = k
                    lab[s + idx] = cell[i]
                bounds = [f[0] for f in frags] + [e]
                largest = max(range(len(frags)), key=lambda i: bounds[i + 1] - bounds[i])
                had = s in inq
                trace.append(s)
                for i, (a, k) in enumerate(frags):
                    b = bounds[i + 1]
                    end[a] = b
                    for p in range(a, b):
                        start[lab[p]] = a
                    trace.append(k)
                    trace.append(b - a)
                    if (had or i != largest) and a not in inq:
                        queue.append(a)
                        inq.add(a)
        return tuple(trace)

    def _target(self, end):
        best_s, best_size = None, self.n + 1
        s = 0
        while s < self.n:
            size = end[s] - s
            if 1 < size < best_size:
                best_s, best_size = s, size
                if size == 2:
                    break
            s = end[s]
        return best_s

    def _cert(self, lab):
        pos = [0] * self.n
        for p, v in enumerate(lab):
            pos[v] = p
        out = []
        for v in lab:
            nb = sorted(pos[u] for u in self.out_adj[v])
            out.append(len(nb))
            out.extend(nb)
        return tuple(out)

    def _orbits(self, fixed):
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.gens:
            if all(g[v] == v for v in fixed):
                for x, y in enumerate(g):
                    rx, ry = find(x), find(y)
                    if rx != ry:
                        parent[max(rx, ry)] = min(rx, ry)
        return find

    def run(self):
        n = self.n
        lab = sorted(range(n), key=lambda v: (self.colors[v], v))
        start = [0] * n
        end = [0] * n
        cells = []
        s = 0
        while s < n:
            e = s
            while e < n and self.colors[lab[e]] == self.colors[lab[s]]:
                e += 1
            end[s] = e
            for p in range(s, e):
                start[lab[p]] = s
            cells.append(s)
            s = e
        tr = self._refine(lab, start, end, cells)
        self._dfs(lab, start, end, [], (tr,))

    def _dfs(self, lab, start, end, path, traces):
        self.nodes += 1
        depth = len(path)
        s = self._target(end)
        if s is None:
            return self._leaf(lab, path, traces)
        e = end[s]
        explored: list[int] = []
        seen_gens = -1
        find = None
        for v in sorted(lab[s:e]):
            if explored:
                if len(self.gens) != seen_gens:
                    seen_gens = len(self.gens)
                    find = self._orbits(path) if self.gens else None
                if find is not None:
                    rv = find(v)
                    if any(find(u) == rv for u in explored):
                        continue
            explored.append(v)
            lab2, start2, end2 = lab[:], start[:], end[:]
            i = lab2.index(v, s, e)
            lab2[i], lab2[s] = lab2[s], v
            end2[s] = s + 1
            end2[s + 1] = e
            start2[v] = s
            for p in range(s + 1, e):
                start2[lab2[p]] = s + 1
            traces2 = traces + (self._refine(lab2, start2, end2, [s]),)
            if self.first is not None:
                k = depth + 2
                if traces2 != self.first.traces[:k] and traces2 > self.best.traces[:k]:
                    continue
            r = self._dfs(lab2, start2, end2, path + [v], traces2)
            if r is not None and r < depth:
                return r
        return None

    def _leaf(self, lab, path, traces):
        cert = self._cert(lab)
        if self.first is None:
            self.first = self.best = _Leaf(traces, cert, lab, path)
            return None
        for ref in (self.first, self.best):
            if traces == ref.traces and cert == ref.cert:
                gamma = [0] * self.n
                for a, b in zip(ref.lab, lab):
                    gamma[a] = b
                self.gens.append(gamma)
                common = 0
                while common < len(path) and path[common] == ref.path[common]:
                    common += 1
                return common
        best = self.best
        if (traces, cert) < (best.traces, best.cert):
            self.best = _Leaf(traces, cert, lab, path)
        return None

    def group_order(self) -> int:
        order = 1
        path = self.first.path
        for i, v in enumerate(path):
            find = self._orbits(path[:i])
            rv = find(v)
            order *= sum(1 for u in range(self.n) if find(u) == rv)
        return order


def canonical_labeling(g: ColoredGraph) -> LabelingResult:
    """Canonical form and automorphism group order of a colored digraph."""
    s = _Search(g)
    if g.n_vertices:
        s.run()
        lab = s.best.lab
        cert = s.best.cert
        order = s.group_order()
    else:
        lab, cert, order = [], (), 1
    colors = [g.colors[v] for v in lab]
    data = array("H", [len(colors)] + colors + list(cert))
    return LabelingResult(data.tobytes(), tuple(lab), tuple(map(tuple, s.gens)), order, s.nodes)


# -- codes -------------------------------------------------------------------

def _canonical_side(c: LinearCode) -> tuple[LinearCode, int]:
    # Aut(C) = Aut(C⊥) for q = 2, 3 and C ≅ D iff C⊥ ≅ D⊥, so the smaller
    # of the two codes carries the same information.
    if c.k > c.n - c.k:
        return c.dual(), 1
    return c, 0


@lru_cache(maxsize=8192)
def _canonize(c: LinearCode) -> tuple[CanonicalKey, int]:
    side, flag = _canonical_side(c)
    res = canonical_labeling(build_graph(side))
    header = bytes([c.q, c.n, c.k, flag])
    return CanonicalKey(header + res.certificate), res.group_order


def canonical_key(c: LinearCode) -> CanonicalKey:
    return _canonize(c)[0]


def automorphism_order(c: LinearCode) -> AutInfo:
    """Order of the permutation (q=2) or monomial (q=3) automorphism group."""
    if c.k == 0 or c.k == c.n:
        return AutInfo(math.factorial(c.n) * (c.q - 1) ** c.n)
    return AutInfo(_canonize(c)[1])


def canonize(c: LinearCode) -> tuple[CanonicalKey, AutInfo]:
    return canonical_key(c), automorphism_order(c)


def are_equivalent(c1: LinearCode, c2: LinearCode) -> bool:
    if c1.q != c2.q:
        raise FieldError("codes over different fields")
    if (c1.n, c1.k) != (c2.n, c2.k):
        return False
    side1, _ = _canonical_side(c1)
    side2, _ = _canonical_side(c2)
    if side1.weight_enumerator != side2.weight_enumerator:
        return False
    return canonical_key(c1) == canonical_key(c2)
