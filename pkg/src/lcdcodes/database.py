"""Plain-text storage for classification results.

One file per ``(q, n, k)``::

    LCDDB 1 2 6 3 8
    G 100001 010001 001110 AUT 4 D 1 DD 1 WE 1,2,1,1,2,1,0

Generator rows are digit strings in the reduced row-echelon form, one
token per row, first coordinate first.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from .classify import ClassificationResult, ClassRecord
from .code import LinearCode, WeightEnumerator
from .field import FieldError
from .mass import class_mass, mass

FORMAT_VERSION = 1
DEFAULT_DIR = "lcddb"


class DatabaseError(ValueError):
    """A database file is malformed or inconsistent with its header."""


@dataclass(frozen=True)
class Entry:
    rows: tuple[str, ...]
    aut_order: int
    d: int
    d_dual: int
    weight_enumerator: tuple[int, ...]

    def code(self, q: int) -> LinearCode:
        return LinearCode.from_rows(q, list(self.rows))


@dataclass(frozen=True)
class CodeDb:
    q: int
    n: int
    k: int
    entries: tuple[Entry, ...]

    @property
    def N(self) -> int:
        return len(self.entries)

    def stored_mass(self) -> int:
        """Mass implied by the stored group orders (not recomputed)."""
        return sum(class_mass(self.q, self.n, e.aut_order) for e in self.entries)

    def codes(self) -> list[LinearCode]:
        return [e.code(self.q) for e in self.entries]

    @classmethod
    def from_result(cls, r: ClassificationResult) -> CodeDb:
        entries = tuple(
            Entry(tuple(rec.code.G.to_strings()), rec.aut_order, rec.d, rec.d_dual,
                  rec.weight_enumerator.coefficients)
            for rec in r.classes
        )
        return cls(r.q, r.n, r.k, entries)

    def to_result(self) -> ClassificationResult:
        """A result object built from the stored data.

        Class keys are left empty; the result is marked complete when the
        stored group orders reproduce the mass formula.
        """
        recs = [
            ClassRecord(e.code(self.q), None, e.aut_order, e.d, e.d_dual,
                        WeightEnumerator(e.weight_enumerator))
            for e in self.entries
        ]
        total, target = self.stored_mass(), mass(self.q, self.n, self.k)
        return ClassificationResult(self.q, self.n, self.k, recs, total, target,
                                    total == target, "database")


def serialize(db: CodeDb) -> str:
    lines = [f"LCDDB {FORMAT_VERSION} {db.q} {db.n} {db.k} {db.N}"]
    for e in db.entries:
        we = ",".join(map(str, e.weight_enumerator))
        lines.append(f"G {' '.join(e.rows)} AUT {e.aut_order} D {e.d} DD {e.d_dual} WE {we}")
    return "\n".join(lines) + "\n"


def _int(tok: str, what: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise DatabaseError(f"line {lineno}: bad {what} {tok!r}") from None


def parse(text: str) -> CodeDb:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise DatabaseError("empty database")
    head = lines[0].split()
    if len(head) != 6 or head[0] != "LCDDB":
        raise DatabaseError(f"bad header {lines[0]!r}")
    version, q, n, k, count = (_int(t, "header field", 1) for t in head[1:])
    if version != FORMAT_VERSION:
        raise DatabaseError(f"unsupported format version {version}")
    if q not in (2, 3):
        raise DatabaseError(f"unsupported field size {q}")
    entries = []
    for lineno, line in enumerate(lines[1:], start=2):
        tok = line.split()
        if len(tok) != k + 9 or tok[0] != "G" or tok[k + 1:k + 9:2] != ["AUT", "D", "DD", "WE"]:
            raise DatabaseError(f"line {lineno}: expected G <{k} rows> AUT .. D .. DD .. WE ..")
        rows = tuple(tok[1:k + 1])
        for r in rows:
            if len(r) != n or any(c not in "012"[:q] for c in r):
                raise DatabaseError(f"line {lineno}: {r!r} is not a length-{n} GF({q}) row")
        we = tuple(_int(x, "weight enumerator", lineno) for x in tok[k + 8].split(","))
        if len(we) != n + 1:
            raise DatabaseError(f"line {lineno}: weight enumerator needs {n + 1} entries")
        entries.append(Entry(rows, _int(tok[k + 2], "AUT", lineno), _int(tok[k + 4], "D", lineno),
                             _int(tok[k + 6], "DD", lineno), we))
    if len(entries) != count:
        raise DatabaseError(f"header announces {count} classes, found {len(entries)}")
    return CodeDb(q, n, k, tuple(entries))


# -- files ------------------------------------------------------------------

def default_dir() -> Path:
    return Path(os.environ.get("LCDDB_DIR") or DEFAULT_DIR)


def db_path(directory: str | Path, q: int, n: int, k: int) -> Path:
    return Path(directory) / f"lcd-q{q}-n{n}-k{k}.db"


def save(db: CodeDb, path: str | Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(serialize(db))
    tmp.replace(path)


def load(path: str | Path) -> CodeDb:
    return parse(Path(path).read_text())


# -- verification -----------------------------------------------------------

def verify(db: CodeDb) -> list[str]:
    """Recheck every stored class; returns the problems found (empty = pass).

    Checks rank and reduced form, the LCD property, the stored parameters
    and group order against fresh canonization, pairwise distinct classes
    and the mass identity.
    """
    from .canon import canonize

    problems: list[str] = []
    keys: dict = {}
    total = 0
    for i, e in enumerate(db.entries, start=1):
        try:
            code = e.code(db.q)
        except FieldError as exc:
            problems.append(f"class {i}: {exc}")
            continue
        if code.k != db.k or code.n != db.n:
            problems.append(f"class {i}: generator has rank {code.k}, expected {db.k}")
            continue
        if tuple(code.G.to_strings()) != e.rows:
            problems.append(f"class {i}: generator is not in reduced row-echelon form")
        if not code.is_lcd():
            problems.append(f"class {i}: not LCD (hull dimension {code.hull_dim})")
            continue
        key, aut = canonize(code)
        if aut.order != e.aut_order:
            problems.append(f"class {i}: |Aut| is {aut.order}, stored {e.aut_order}")
        if (code.min_weight, code.dual_min_weight) != (e.d, e.d_dual):
            problems.append(f"class {i}: (d, d_dual) is {(code.min_weight, code.dual_min_weight)}, "
                            f"stored {(e.d, e.d_dual)}")
        if code.weight_enumerator.coefficients != e.weight_enumerator:
            problems.append(f"class {i}: weight enumerator differs from the stored one")
        if key in keys:
            problems.append(f"class {i}: equivalent to class {keys[key]}")
        keys.setdefault(key, i)
        total += class_mass(db.q, db.n, aut.order)
    target = mass(db.q, db.n, db.k)
    if total != target:
        kind = "exceeds" if total > target else "falls short of"
        problems.append(f"mass {total} {kind} the target {target}")
    return problems
