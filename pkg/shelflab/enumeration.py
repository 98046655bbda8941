"""Counting finite magmas that satisfy a set of axioms, labeled or up to isomorphism."""
import dataclasses as dcl
import enum
import logging
import math
import typing as t

import pandas as pd

from shelflab.axioms import Axiom
from shelflab.errors import PreconditionError
from shelflab.errors import ShelfLabError
from shelflab.magma import CANONICAL_ORDER_LIMIT
from shelflab.magma import FiniteMagma
from shelflab.magma import automorphisms
from shelflab.magma import canonical_form
from shelflab.magma import check_axioms
from shelflab.magma import make_magma


ENUMERATION_ORDER_LIMIT = 4
ENUMERATION_OVERRIDE_LIMIT = 5
WITNESS_ORDER_DEFAULT = 3

Cell = tuple[int, int]

# Iso-class counts of associative shelves, associative spindles and
# unital shelves of orders 1 to 4, as published.
PUBLISHED_COUNTS: dict[str, tuple[int, ...]] = {
    "AS": (1, 4, 16, 93),
    "ASp": (1, 3, 9, 38),
    "US": (1, 1, 4, 6),
}
COLUMN_AXIOMS: dict[str, Axiom] = {
    "AS": Axiom.ASSOCIATIVE | Axiom.SHELF,
    "ASp": Axiom.ASSOCIATIVE | Axiom.SPINDLE,
    "US": Axiom.UNITAL,
}


class EnumerationBoundError(ShelfLabError):
    """We raise this for searches above the configured order."""


class Mode(enum.Enum):
    LABELED = "labeled"
    ISO = "iso"


@dcl.dataclass(frozen=True)
class EnumerationQuery:
    order: int
    axioms: Axiom
    mode: Mode = Mode.ISO

    def __post_init__(self) -> None:
        if self.order < 1:
            raise PreconditionError(f"Order must be positive, not {self.order}")
        if not self.axioms:
            raise PreconditionError("At least one axiom is required")


@dcl.dataclass
class CountReport:
    """How many magmas answer a query, and (optionally) which ones."""

    query: EnumerationQuery
    count: int
    witnesses: list[FiniteMagma] | None = None

    def as_dict(self) -> dict[str, t.Any]:
        return {
            "order": self.query.order,
            "axioms": self.query.axioms.names(),
            "mode": self.query.mode.value,
            "count": self.count,
        }


class _Search:
    """Cell-by-cell backtracking with checks on every completed constraint instance."""

    def __init__(
        self,
        n: int,
        axioms: Axiom,
        prefilled: dict[Cell, int],
        cell_order: t.Sequence[Cell] | None,
    ) -> None:
        self.n = n
        self.axioms = axioms
        self.table = [[-1] * n for _ in range(n)]
        for (x, y), value in prefilled.items():
            self.table[x][y] = value
        cells = cell_order or [(x, y) for x in range(n) for y in range(n)]
        self.cells = [cell for cell in cells if cell not in prefilled]
        self.nodes = 0

    def at(self, x: int, y: int) -> int:
        return self.table[x][y] if x >= 0 and y >= 0 else -1

    @staticmethod
    def clash(left: int, right: int) -> bool:
        return left >= 0 and right >= 0 and left != right

    def associative_ok(self, p: int, q: int) -> bool:
        """(a*b)*c == a*(b*c) wherever cell (p, q) takes part."""
        at, clash, n, v = self.at, self.clash, self.n, self.table[p][q]
        for c in range(n):
            if clash(at(v, c), at(p, at(q, c))):
                return False
        for a in range(n):
            if clash(at(at(a, p), q), at(a, v)):
                return False
        for a in range(n):
            for b in range(n):
                if self.table[a][b] == p and clash(v, at(a, at(b, q))):
                    return False
                if self.table[a][b] == q and clash(at(at(p, a), b), v):
                    return False
        return True

    def distributive_ok(self, p: int, q: int) -> bool:
        """(a*b)*c == (a*c)*(b*c) wherever cell (p, q) takes part."""
        at, clash, n, v = self.at, self.clash, self.n, self.table[p][q]
        table = self.table
        for c in range(n):
            if clash(at(v, c), at(at(p, c), at(q, c))):
                return False
        for a in range(n):
            for b in range(n):
                if table[a][b] == p and clash(v, at(at(a, q), at(b, q))):
                    return False
        for b in range(n):
            if clash(at(at(p, b), q), at(v, at(b, q))):
                return False
        for a in range(n):
            if clash(at(at(a, p), q), at(at(a, q), v)):
                return False
        for c in range(n):
            left = [a for a in range(n) if table[a][c] == p]
            if not left:
                continue
            right = [b for b in range(n) if table[b][c] == q]
            for a in left:
                for b in right:
                    if clash(at(at(a, b), c), v):
                        return False
        return True

    def proto_unital_ok(self, p: int, q: int) -> bool:
        """a*b == b*(a*b) and a*b == (a*b)*b wherever cell (p, q) takes part."""
        at, clash, n, v = self.at, self.clash, self.n, self.table[p][q]
        if clash(v, at(q, v)) or clash(v, at(v, q)):
            return False
        for a in range(n):
            if self.table[a][p] == q and clash(q, v):
                return False
            if self.table[a][q] == p and clash(p, v):
                return False
        return True

    def injective_ok(self, p: int, q: int) -> bool:
        v = self.table[p][q]
        if Axiom.RACK in self.axioms or Axiom.QUASIGROUP in self.axioms:
            if any(self.table[x][q] == v for x in range(self.n) if x != p):
                return False
        if Axiom.QUASIGROUP in self.axioms:
            if any(self.table[p][y] == v for y in range(self.n) if y != q):
                return False
        return True

    def consistent(self, p: int, q: int) -> bool:
        axioms = self.axioms
        return (
            self.injective_ok(p, q)
            and (Axiom.SHELF not in axioms or self.distributive_ok(p, q))
            and (Axiom.ASSOCIATIVE not in axioms or self.associative_ok(p, q))
            and (Axiom.PROTO_UNITAL not in axioms or self.proto_unital_ok(p, q))
        )

    def run(self, position: int = 0) -> t.Iterator[FiniteMagma]:
        if position == len(self.cells):
            magma = make_magma(self.n, self.table)
            if check_axioms(magma).holds(self.axioms):
                yield magma
            return
        p, q = self.cells[position]
        for value in range(self.n):
            self.nodes += 1
            self.table[p][q] = value
            if self.consistent(p, q):
                yield from self.run(position + 1)
        self.table[p][q] = -1


def _prefill(
    n: int, axioms: Axiom, unit: int | None, fixed: dict[Cell, int],
) -> dict[Cell, int] | None:
    """Cells forced by idempotence, the unit and the caller; None on conflict."""
    cells = dict(fixed)

    def force(cell: Cell, value: int) -> bool:
        if cells.setdefault(cell, value) != value:
            return False
        return True

    if Axiom.IDEMPOTENT in axioms:
        for x in range(n):
            if not force((x, x), x):
                return None
    if unit is not None:
        for x in range(n):
            if not (force((unit, x), x) and force((x, unit), x)):
                return None
    return cells


def search_tables(
    n: int,
    axioms: Axiom,
    *,
    fixed: dict[Cell, int] | None = None,
    cell_order: t.Sequence[Cell] | None = None,
) -> t.Iterator[FiniteMagma]:
    """Yield every labeled order-n table satisfying the axioms and the fixed cells."""
    axioms = axioms.closure()
    fixed = fixed or {}
    for (x, y), value in fixed.items():
        if not (0 <= x < n and 0 <= y < n and 0 <= value < n):
            raise PreconditionError(f"Fixed cell ({x}, {y}) = {value} is out of range")
    units: list[int | None] = list(range(n)) if Axiom.UNITAL in axioms else [None]
    for unit in units:
        prefilled = _prefill(n, axioms, unit, fixed)
        if prefilled is None:
            continue
        search = _Search(n, axioms, prefilled, cell_order)
        yield from search.run()
        logging.debug("Order %d, unit %s: %d search nodes", n, unit, search.nodes)


def check_order(n: int, *, allow_override: bool = False,
                limit: int = ENUMERATION_ORDER_LIMIT,
                override_limit: int = ENUMERATION_OVERRIDE_LIMIT) -> None:
    bound = override_limit if allow_override else limit
    if n > bound:
        hint = "" if allow_override else " without the override"
        raise EnumerationBoundError(f"Order {n} is above the limit of {bound}{hint}")


def enumerate_magmas(
    query: EnumerationQuery,
    *,
    witnesses: bool | None = None,
    allow_override: bool = False,
    cell_order: t.Sequence[Cell] | None = None,
    limit: int = ENUMERATION_ORDER_LIMIT,
    override_limit: int = ENUMERATION_OVERRIDE_LIMIT,
    canonical_limit: int = CANONICAL_ORDER_LIMIT,
) -> CountReport:
    """Count the magmas answering the query, labeled or up to isomorphism."""
    check_order(query.order, allow_override=allow_override,
                limit=limit, override_limit=override_limit)
    if witnesses is None:
        witnesses = query.order <= WITNESS_ORDER_DEFAULT
    tables = search_tables(query.order, query.axioms, cell_order=cell_order)
    if query.mode is Mode.ISO:
        found = sorted(
            {canonical_form(magma, canonical_limit) for magma in tables},
            key=FiniteMagma.flat,
        )
    else:
        found = sorted(tables, key=FiniteMagma.flat)
    logging.info(
        "Order %d %s (%s): %d", query.order, "+".join(query.axioms.names()),
        query.mode.value, len(found),
    )
    return CountReport(query, len(found), found if witnesses else None)


def orbit_count(classes: t.Iterable[FiniteMagma]) -> int:
    """Labeled tables represented by these iso classes: sum of n!/|Aut|."""
    return sum(
        math.factorial(magma.order) // len(automorphisms(magma)) for magma in classes
    )


def iso_count(n: int, axioms: Axiom, *, allow_override: bool = False) -> int:
    return enumerate_magmas(
        EnumerationQuery(n, axioms), witnesses=False, allow_override=allow_override,
    ).count


def count_table(nmax: int) -> pd.DataFrame:
    """Iso-class counts of AS, ASp and US next to the published ones.

    Mismatches are logged, never raised; the pre_unital column is the count of
    pre-unital shelves one order down, which must equal the US count.
    """
    if nmax > ENUMERATION_ORDER_LIMIT:
        raise EnumerationBoundError(f"nmax is limited to {ENUMERATION_ORDER_LIMIT}")
    rows = []
    for n in range(1, nmax + 1):
        row: dict[str, t.Any] = {"n": n}
        for column, axioms in COLUMN_AXIOMS.items():
            computed = iso_count(n, axioms)
            published = PUBLISHED_COUNTS[column][n - 1]
            row[column] = computed
            row[f"{column}_published"] = published
            if computed != published:
                logging.warning(
                    "%s at n=%d: computed %d, published %d",
                    column, n, computed, published,
                )
        row["pre_unital"] = iso_count(n - 1, Axiom.PRE_UNITAL) if n > 1 else None
        rows.append(row)
    return pd.DataFrame(rows).set_index("n")
