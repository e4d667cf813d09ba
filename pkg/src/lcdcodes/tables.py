"""Text reports in the layout of the published classification tables."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

from .classify import ClassificationResult, TableRow, refine_by_distance

TABLE_IDS = ("binary-main", "ternary-main", "aut-binary", "aut-ternary", "dim2-3")


@dataclass(frozen=True)
class TableSpec:
    q: int
    kind: str  # "main", "aut" or "count"
    cells: tuple[tuple[int, int], ...]


def table_spec(table_id: str, max_n: int | None = None) -> TableSpec:
    """The ``(n, k)`` cells of a table, optionally cut at length ``max_n``."""
    if table_id == "binary-main":
        q, kind, top = 2, "main", 11
        cells = [(n, k) for n in range(4, 14) for k in range(2, n // 2 + 1)]
    elif table_id == "ternary-main":
        q, kind, top = 3, "main", 8
        cells = [(n, k) for n in range(4, 11) for k in range(2, n // 2 + 1)]
    elif table_id == "aut-binary":
        q, kind, top = 2, "aut", 11
        cells = [(n, k) for n in range(2, 13) for k in range(1, n // 2 + 1)]
    elif table_id == "aut-ternary":
        q, kind, top = 3, "aut", 8
        cells = [(n, k) for n in range(2, 9) for k in range(1, n // 2 + 1)]
    elif table_id == "dim2-3":
        q, kind, top = 2, "count", 20
        cells = [(n, 2) for n in range(14, 31)] + [(n, 3) for n in range(14, 26)]
    else:
        raise ValueError(f"unknown table {table_id!r}; choose from {', '.join(TABLE_IDS)}")
    top = top if max_n is None else max_n
    return TableSpec(q, kind, tuple(c for c in cells if c[0] <= top))


def _spread(counts: dict[int, int]) -> list[int]:
    return [counts.get(d, 0) for d in range(1, max(counts) + 1)] if counts else []


def format_main_row(row: TableRow) -> str:
    """``N | N_1 N_2 .. | N_1' N_2' ..`` for one ``(n, k)``."""
    by_d = " ".join(map(str, _spread(row.by_d)))
    by_dd = " ".join(map(str, _spread(row.by_d_dual)))
    return f"{row.N} | {by_d} | {by_dd}"


Lookup = Callable[[int, int, int], "ClassificationResult | None"]


def missing(spec: TableSpec, lookup: Lookup) -> list[tuple[int, int, int]]:
    return [(spec.q, n, k) for n, k in spec.cells if lookup(spec.q, n, k) is None]


def render(table_id: str, lookup: Lookup, max_n: int | None = None) -> list[str]:
    """Report lines ``(n,k)<TAB>value``; raises KeyError on a missing result."""
    spec = table_spec(table_id, max_n)
    lines = []
    for n, k in spec.cells:
        r = lookup(spec.q, n, k)
        if r is None:
            raise KeyError((spec.q, n, k))
        if spec.kind == "main":
            value = format_main_row(refine_by_distance(r))
        elif spec.kind == "aut":
            value = str(min(rec.aut_order for rec in r.classes))
        else:
            value = str(r.N)
        lines.append(f"({n},{k})\t{value}")
    return lines
