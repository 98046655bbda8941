"""Finite magmas given by Cayley tables, and the axioms they may satisfy."""
import dataclasses as dcl
import functools
import itertools
import logging
import operator
import typing as t

import numpy as np

from shelflab.axioms import Axiom
from shelflab.errors import PreconditionError
from shelflab.errors import ShelfLabError
from shelflab.errors import SizeMismatchError


CANONICAL_ORDER_LIMIT = 6

Table = tuple[tuple[int, ...], ...]
Permutation = tuple[int, ...]
RightFixed = frozenset[tuple[int, int]]


class MagmaValidationError(ShelfLabError):
    """We raise this for Cayley tables of the wrong shape or with bad entries."""

    def __init__(
        self, message: str, row: int | None = None, col: int | None = None,
    ) -> None:
        super().__init__(message)
        self.row = row
        self.col = col


class CanonicalBoundError(ShelfLabError):
    """We raise this when asked to canonicalize a magma that is too big."""


@dcl.dataclass(frozen=True)
class FiniteMagma:
    """A binary operation on {0, ..., order-1}; table[x][y] is x*y."""

    order: int
    table: Table

    def __post_init__(self) -> None:
        if self.order < 1:
            raise MagmaValidationError(f"Order must be positive, not {self.order}")
        rows = list(self.table)
        if len(rows) != self.order:
            raise MagmaValidationError(
                f"Expected {self.order} rows, got {len(rows)}", row=len(rows),
            )
        normalized = []
        for x, row in enumerate(rows):
            values = list(row)
            if len(values) != self.order:
                raise MagmaValidationError(
                    f"Row {x} has {len(values)} entries, expected {self.order}",
                    row=x,
                )
            for y, value in enumerate(values):
                try:
                    value = operator.index(value)
                except TypeError as exc:
                    raise MagmaValidationError(
                        f"Cell ({x}, {y}) is not an integer: {value!r}", row=x, col=y,
                    ) from exc
                if not 0 <= value < self.order:
                    raise MagmaValidationError(
                        f"Cell ({x}, {y}) = {value} is outside [0, {self.order})",
                        row=x,
                        col=y,
                    )
                values[y] = value
            normalized.append(tuple(values))
        object.__setattr__(self, "table", tuple(normalized))

    def __call__(self, x: int, y: int) -> int:
        """Return x*y."""
        return self.table[x][y]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.table)

    @functools.cached_property
    def array(self) -> np.ndarray:
        """Read-only numpy view of the table."""
        array = np.array(self.table, dtype=np.int64).reshape(self.order, self.order)
        array.setflags(write=False)
        return array

    def column(self, y: int) -> tuple[int, ...]:
        """Right translation by y, as the tuple (x*y for all x)."""
        return tuple(row[y] for row in self.table)

    def flat(self) -> tuple[int, ...]:
        """Row-major entries, the key used for lexicographic comparisons."""
        return tuple(itertools.chain.from_iterable(self.table))

    def elements(self) -> range:
        return range(self.order)


def make_magma(n: int, table: t.Sequence[t.Sequence[int]]) -> FiniteMagma:
    """Validate a Cayley table of order n."""
    return FiniteMagma(n, tuple(tuple(row) for row in table))


def from_function(n: int, product: t.Callable[[int, int], int]) -> FiniteMagma:
    """Tabulate product(x, y) over {0, ..., n-1}."""
    return make_magma(n, [[product(x, y) for y in range(n)] for x in range(n)])


def is_associative(magma: FiniteMagma) -> bool:
    """Check (a*b)*c == a*(b*c), one row of a at a time."""
    table = magma.array
    return all(
        np.array_equal(table[table[a]], table[a][table])
        for a in magma.elements()
    )


def is_right_distributive(magma: FiniteMagma) -> bool:
    """Check (a*b)*c == (a*c)*(b*c), one row of a at a time."""
    table = magma.array
    return all(
        np.array_equal(table[table[a]], table[table[a][None, :], table])
        for a in magma.elements()
    )


def is_idempotent(magma: FiniteMagma) -> bool:
    return bool(np.array_equal(np.diag(magma.array), np.arange(magma.order)))


def bijective_columns(magma: FiniteMagma) -> tuple[int, ...]:
    """Elements y for which x -> x*y is a bijection."""
    return tuple(
        y for y in magma.elements() if len(set(magma.column(y))) == magma.order
    )


def bijective_rows(magma: FiniteMagma) -> tuple[int, ...]:
    """Elements x for which y -> x*y is a bijection."""
    return tuple(
        x for x in magma.elements() if len(set(magma.table[x])) == magma.order
    )


def find_unit(magma: FiniteMagma) -> int | None:
    """Return the two-sided unit, if there is one."""
    identity = tuple(magma.elements())
    for e in magma.elements():
        if magma.table[e] == identity and magma.column(e) == identity:
            return e
    return None


def satisfies_proto_unital_laws(magma: FiniteMagma) -> bool:
    """Check a*b == b*(a*b) and a*b == (a*b)*b for all pairs."""
    table = magma.array
    right = np.arange(magma.order)[None, :]
    return bool(
        np.array_equal(table, table[right, table])
        and np.array_equal(table, table[table, right]),
    )


def right_fixed_elements(magma: FiniteMagma) -> RightFixed:
    """Pairs (r, c) such that x*r == c for every x."""
    found = set()
    for r in magma.elements():
        column = set(magma.column(r))
        if len(column) == 1:
            (c,) = column
            found.add((r, c))
    return frozenset(found)


def right_zeros(magma: FiniteMagma) -> frozenset[int]:
    """Elements z with x*z == z for every x."""
    return frozenset(r for r, c in right_fixed_elements(magma) if r == c)


def left_zeros(magma: FiniteMagma) -> frozenset[int]:
    """Elements y with y*x == y for every x."""
    return frozenset(
        y for y in magma.elements() if set(magma.table[y]) == {y}
    )


@dcl.dataclass(frozen=True)
class AxiomReport:
    """Everything check_axioms found out about a magma."""

    shelf: bool
    idempotent: bool
    rack: bool
    spindle: bool
    quandle: bool
    associative: bool
    quasigroup: bool
    unital: bool
    unit: int | None
    proto_unital: bool
    pre_unital: bool
    right_fixed: RightFixed
    right_zeros: frozenset[int]

    def flags(self) -> Axiom:
        """The axiom systems that hold, as flags."""
        result = Axiom.NONE
        for flag in Axiom:
            if flag.name and flag.value and getattr(self, flag.name.lower()):
                result |= flag
        return result

    def holds(self, axioms: Axiom) -> bool:
        """Check that every requested axiom system holds."""
        return axioms in self.flags()

    def as_dict(self) -> dict[str, t.Any]:
        """Plain representation for JSON output."""
        result: dict[str, t.Any] = dcl.asdict(self)
        result["right_fixed"] = sorted(list(pair) for pair in self.right_fixed)
        result["right_zeros"] = sorted(self.right_zeros)
        return result


def check_axioms(magma: FiniteMagma) -> AxiomReport:
    """Decide every axiom system by exhaustive checks."""
    shelf = is_right_distributive(magma)
    idempotent = is_idempotent(magma)
    associative = is_associative(magma)
    columns = len(bijective_columns(magma)) == magma.order
    rows = len(bijective_rows(magma)) == magma.order
    unit = find_unit(magma) if shelf else None
    proto_unital = shelf and satisfies_proto_unital_laws(magma)
    fixed = right_fixed_elements(magma)
    report = AxiomReport(
        shelf=shelf,
        idempotent=idempotent,
        rack=shelf and columns,
        spindle=shelf and idempotent,
        quandle=shelf and columns and idempotent,
        associative=associative,
        quasigroup=rows and columns,
        unital=unit is not None,
        unit=unit,
        proto_unital=proto_unital,
        pre_unital=proto_unital and idempotent,
        right_fixed=fixed,
        right_zeros=frozenset(r for r, c in fixed if r == c),
    )
    logging.debug("Axioms of order-%d magma: %s", magma.order, report.flags())
    return report


def transpose(magma: FiniteMagma) -> FiniteMagma:
    """Swap the arguments: the result computes y*x."""
    return FiniteMagma(magma.order, tuple(zip(*magma.table)))


def permute(magma: FiniteMagma, sigma: t.Sequence[int]) -> FiniteMagma:
    """Relabel x as sigma[x]; sigma is then an isomorphism onto the result."""
    n = magma.order
    if sorted(sigma) != list(range(n)):
        raise PreconditionError(f"{tuple(sigma)} is not a permutation of {n} elements")
    table = [[0] * n for _ in range(n)]
    for x, row in enumerate(magma.table):
        for y, value in enumerate(row):
            table[sigma[x]][sigma[y]] = sigma[value]
    return make_magma(n, table)


def _profiles(magma: FiniteMagma) -> list[tuple[int, ...]]:
    """Isomorphism-invariant fingerprint of every element."""
    counts = [0] * magma.order
    for value in magma.flat():
        counts[value] += 1
    return [
        (
            int(magma.table[x][x] == x),
            counts[x],
            len(set(magma.table[x])),
            len(set(magma.column(x))),
            int(magma.table[magma.table[x][x]][x] == magma.table[x][x]),
        )
        for x in magma.elements()
    ]


def isomorphisms(
    first: FiniteMagma, second: FiniteMagma,
) -> t.Iterator[Permutation]:
    """Yield every isomorphism, in lexicographic order."""
    if first.order != second.order:
        raise SizeMismatchError(
            f"Cannot compare magmas of orders {first.order} and {second.order}",
        )
    n = first.order
    profile1 = _profiles(first)
    profile2 = _profiles(second)
    if sorted(profile1) != sorted(profile2):
        return

    image = [-1] * n
    used = [False] * n

    def consistent(k: int) -> bool:
        for a in range(k + 1):
            for b in range(k + 1):
                if a != k and b != k and first.table[a][b] != k:
                    continue
                target = image[first.table[a][b]]
                if target >= 0 and target != second.table[image[a]][image[b]]:
                    return False
        return True

    def extend(k: int) -> t.Iterator[Permutation]:
        if k == n:
            yield tuple(image)
            return
        for v in range(n):
            if used[v] or profile2[v] != profile1[k]:
                continue
            image[k] = v
            used[v] = True
            if consistent(k):
                yield from extend(k + 1)
            used[v] = False
            image[k] = -1

    yield from extend(0)


def find_isomorphism(
    first: FiniteMagma, second: FiniteMagma,
) -> Permutation | None:
    """Return sigma with sigma(x*y) == sigma(x)*'sigma(y), or None."""
    return next(isomorphisms(first, second), None)


def automorphisms(magma: FiniteMagma) -> list[Permutation]:
    """The automorphism group, identity first."""
    return list(isomorphisms(magma, magma))


def canonical_form(
    magma: FiniteMagma, limit: int = CANONICAL_ORDER_LIMIT,
) -> FiniteMagma:
    """The lexicographically least relabeling of the table."""
    n = magma.order
    if n > limit:
        raise CanonicalBoundError(
            f"Canonical forms are limited to order {limit} (got {n}); "
            "compare magmas pairwise with find_isomorphism instead",
        )
    table = magma.table
    best: tuple[int, ...] | None = None
    for sigma in itertools.permutations(range(n)):
        inverse = [0] * n
        for x, image in enumerate(sigma):
            inverse[image] = x
        flat = tuple(
            sigma[table[inverse[i]][inverse[j]]] for i in range(n) for j in range(n)
        )
        if best is None or flat < best:
            best = flat
    assert best is not None
    return make_magma(n, [best[i * n:(i + 1) * n] for i in range(n)])


def adjoin_unit(magma: FiniteMagma) -> FiniteMagma:
    """Add a fresh element n acting as a two-sided unit."""
    n = magma.order
    table = [[*row, x] for x, row in enumerate(magma.table)]
    table.append(list(range(n + 1)))
    return make_magma(n + 1, table)


def remove_unit(magma: FiniteMagma) -> FiniteMagma:
    """Drop the unit, keeping the order of the remaining elements."""
    unit = find_unit(magma)
    if unit is None:
        raise PreconditionError("Magma has no unit to remove")
    if magma.order == 1:
        raise PreconditionError("Removing the unit would leave nothing")
    rest = [x for x in magma.elements() if x != unit]
    index = {x: i for i, x in enumerate(rest)}
    try:
        table = [[index[magma.table[x][y]] for y in rest] for x in rest]
    except KeyError as exc:
        raise PreconditionError(
            "Some product of non-units is the unit; the rest is not closed",
        ) from exc
    return make_magma(len(rest), table)
