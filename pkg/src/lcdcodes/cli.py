"""Command-line front end: ``lcdcodes <command> ...``.

Exit status: 0 success, 1 failed verification, 2 usage error,
3 internal invariant violation (mass mismatch).
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
import time
from pathlib import Path

from . import database, tables
from .canon import are_equivalent, automorphism_order, canonical_key
from .classify import STRATEGIES, ClassificationError, ClassificationResult, classify
from .code import LinearCode
from .field import FieldError
from .mass import lower_bound_t, mass

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class MissingDatabase(UsageError):
    def __init__(self, q: int, n: int, k: int, path: Path):
        super().__init__(
            f"the classification of ({q},{n},{k}) is needed but {path} does not exist.\n"
            f"Run first:  lcdcodes classify -q {q} -n {n} -k {k} --db-dir {path.parent}")
        self.qnk = (q, n, k)


class Store:
    """Results by ``(q, n, k)``: memory, then the database directory, then
    (if allowed) a fresh classification that is saved on completion."""

    def __init__(self, directory: Path, workers: int = 1, build: bool = True, echo=None):
        self.directory = directory
        self.workers = workers
        self.build = build
        self.echo = echo or (lambda msg: None)
        self.mem: dict[tuple[int, int, int], ClassificationResult] = {}

    def path(self, q: int, n: int, k: int) -> Path:
        return database.db_path(self.directory, q, n, k)

    def lookup(self, q: int, n: int, k: int) -> ClassificationResult | None:
        key = (q, n, k)
        if key not in self.mem:
            p = self.path(q, n, k)
            if not p.exists():
                return None
            r = database.load(p).to_result()
            if not r.complete:
                raise UsageError(f"{p} is incomplete (mass {r.accumulated_mass}/{r.target_mass})")
            self.mem[key] = r
        return self.mem[key]

    def get(self, q: int, n: int, k: int, strategy: str = "auto") -> ClassificationResult:
        r = self.lookup(q, n, k)
        if r is not None:
            return r
        if not self.build:
            raise MissingDatabase(q, n, k, self.path(q, n, k))
        return self.compute(q, n, k, strategy)

    def compute(self, q: int, n: int, k: int, strategy: str = "auto") -> ClassificationResult:
        cache = {}
        if 2 * k > n:
            cache[(q, n, n - k)] = self.get(q, n, n - k)
        t0 = time.perf_counter()
        r = classify(q, n, k, strategy, shorter=self.get, workers=self.workers, cache=cache)
        self.mem[(q, n, k)] = r
        database.save(database.CodeDb.from_result(r), self.path(q, n, k))
        self.echo(f"  ({q},{n},{k}) N={r.N} [{r.strategy}] {time.perf_counter() - t0:.2f}s")
        return r


def _code_from_rows(q: int, rows: list[str]) -> LinearCode:
    rows = [r for tok in rows for r in tok.split(",") if r]
    if not rows:
        raise UsageError("no generator rows given")
    if len({len(r) for r in rows}) != 1:
        raise UsageError("generator rows have different lengths")
    if any(c not in "012"[:q] for r in rows for c in r):
        raise UsageError(f"rows must be strings over {'012'[:q]}")
    code = LinearCode.from_rows(q, rows)
    if code.k != len(rows):
        raise UsageError(f"the {len(rows)} rows span only a {code.k}-dimensional code")
    return code


# -- commands ---------------------------------------------------------------

def cmd_classify(args) -> int:
    store = Store(args.db_dir, args.threads, build=not args.no_prereqs, echo=print)
    q, n, k = args.q, args.n, args.k
    t0 = time.perf_counter()
    r = store.compute(q, n, k, args.strategy)
    elapsed = time.perf_counter() - t0
    if args.out:
        database.save(database.CodeDb.from_result(r), args.out)
    status = "COMPLETE" if r.complete else "INCOMPLETE"
    print(f"N={r.N} mass={r.accumulated_mass}/{r.target_mass} {status}")
    print(f"strategy={r.strategy} elapsed={elapsed:.2f}s db={args.out or store.path(q, n, k)}")
    return EXIT_OK if r.complete else EXIT_INTERNAL


def cmd_table(args) -> int:
    store = Store(args.db_dir, args.threads, build=args.build, echo=lambda m: print(m, file=sys.stderr))
    spec = tables.table_spec(args.table_id, args.max_n)
    if not args.build:
        absent = tables.missing(spec, store.lookup)
        if absent:
            print(f"missing databases in {args.db_dir}; run:", file=sys.stderr)
            for q, n, k in absent:
                print(f"  lcdcodes classify -q {q} -n {n} -k {k} --db-dir {args.db_dir}", file=sys.stderr)
            print("or pass --build to compute them now", file=sys.stderr)
            return EXIT_USAGE
    for line in tables.render(args.table_id, store.get, args.max_n):
        print(line)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        db = database.load(args.path)
    except (OSError, database.DatabaseError) as exc:
        print(f"FAIL {args.path}: {exc}")
        return EXIT_FAIL
    problems = database.verify(db)
    if problems:
        print(f"FAIL ({db.q},{db.n},{db.k}): {problems[0]}")
        for p in problems[1:]:
            print(f"  {p}")
        return EXIT_FAIL
    print(f"PASS ({db.q},{db.n},{db.k}) N={db.N} mass={mass(db.q, db.n, db.k)}")
    return EXIT_OK


def cmd_info(args) -> int:
    c = _code_from_rows(args.q, args.rows)
    lcd = "yes" if c.is_lcd() else "no"
    d = c.min_weight if c.k else 0
    dd = c.dual_min_weight if c.k < c.n else 0
    aut = automorphism_order(c).order
    print(f"[{c.n},{c.k},{d}] code over GF({c.q})")
    print(f"LCD {lcd}, d={d}, |Aut|={aut}")
    print(f"dual distance {dd}, hull dimension {c.hull_dim}")
    print(f"weight enumerator {c.weight_enumerator}")
    return EXIT_OK


def cmd_mass(args) -> int:
    q, n = args.q, args.n
    ks = [args.k] if args.k is not None else list(range(1, n))
    total = 0
    for k in ks:
        t = lower_bound_t(q, n, k, args.min_aut)
        total += t
        if args.lower:
            print(f"t_{q}({n},{k}) = {t}")
        else:
            print(f"T_{q}({n},{k}) = {mass(q, n, k)}  t_{q}({n},{k}) = {t}")
    if args.k is None:
        print(f"sum t_{q}({n},k) = {total}")
    return EXIT_OK


def cmd_equiv(args) -> int:
    a = _code_from_rows(args.q, args.a.split(","))
    b = _code_from_rows(args.q, args.b.split(","))
    same = are_equivalent(a, b)
    print("equivalent" if same else "not equivalent")
    if same:
        print(f"key {canonical_key(a).hex()[:32]}...")
    return EXIT_OK


# -- parser -----------------------------------------------------------------

def _field(s: str) -> int:
    if s not in ("2", "3"):
        raise argparse.ArgumentTypeError("q must be 2 or 3")
    return int(s)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lcdcodes", description="Classify binary and ternary LCD codes.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--db-dir", type=Path, default=database.default_dir(),
                        help="database directory (default: $LCDDB_DIR or ./lcddb)")
        sp.add_argument("--threads", type=int, default=os.cpu_count() or 1)

    sp = sub.add_parser("classify", help="classify LCD [n,k] codes and write a database")
    sp.add_argument("-q", type=_field, required=True)
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("-k", type=int, required=True)
    sp.add_argument("--strategy", choices=STRATEGIES, default="auto")
    sp.add_argument("--out", type=Path, help="also write the database here")
    sp.add_argument("--no-prereqs", action="store_true",
                    help="fail instead of classifying missing shorter lengths")
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("table", help="print a classification table from stored databases")
    sp.add_argument("table_id", choices=tables.TABLE_IDS)
    sp.add_argument("--max-n", type=int)
    sp.add_argument("--build", action="store_true", help="classify missing entries")
    common(sp)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("verify", help="recheck a database file")
    sp.add_argument("path", type=Path)
    sp.add_argument("--threads", type=int, default=os.cpu_count() or 1)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("info", help="parameters of one code")
    sp.add_argument("-q", type=_field, required=True)
    sp.add_argument("rows", nargs="+", help="generator rows, e.g. 1001 0111 (or 1001,0111)")
    sp.set_defaults(func=cmd_info)

    sp = sub.add_parser("mass", help="mass formula T_q(n,k) and lower bound t_q(n,k)")
    sp.add_argument("-q", type=_field, required=True)
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int, nargs="?")
    sp.add_argument("--lower", action="store_true", help="print only the lower bound")
    sp.add_argument("--min-aut", type=int, default=1,
                    help="assumed least group order in the lower bound (default 1)")
    sp.set_defaults(func=cmd_mass)

    sp = sub.add_parser("equiv", help="decide whether two codes are equivalent")
    sp.add_argument("-q", type=_field, required=True)
    sp.add_argument("a", help="comma-separated generator rows")
    sp.add_argument("b", help="comma-separated generator rows")
    sp.set_defaults(func=cmd_equiv)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FieldError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ClassificationError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
