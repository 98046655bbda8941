"""Laver tables A_k on {1, ..., 2^k}.

Laver tables are left self-distributive, so `LaverTable.shelf()` transposes
them before they meet anything that expects a shelf. Internally element i
stands for i + 1.
"""
import dataclasses as dcl
import itertools
import logging

from shelflab.axioms import Axiom
from shelflab.enumeration import search_tables
from shelflab.errors import ShelfLabError
from shelflab.magma import FiniteMagma
from shelflab.magma import bijective_columns
from shelflab.magma import is_right_distributive
from shelflab.magma import make_magma
from shelflab.magma import right_fixed_elements
from shelflab.magma import transpose


LAVER_K_LIMIT = 10
DISTRIBUTIVITY_CHECK_LIMIT = 6
UNIQUENESS_K_LIMIT = 2


class LaverError(ShelfLabError):
    """We raise this for out-of-range k or a table without the expected structure."""


@dcl.dataclass(frozen=True)
class LaverTable:
    k: int
    magma: FiniteMagma

    @property
    def size(self) -> int:
        return self.magma.order

    def product(self, a: int, b: int) -> int:
        """a*b in the 1-indexed convention."""
        return self.magma(a - 1, b - 1) + 1

    def rows(self) -> list[list[int]]:
        """The table in the 1-indexed convention."""
        return [[value + 1 for value in row] for row in self.magma.table]

    def shelf(self) -> FiniteMagma:
        """The transpose, which is right self-distributive."""
        return transpose(self.magma)


def laver_build(
    k: int, *, limit: int = LAVER_K_LIMIT,
    check_limit: int = DISTRIBUTIVITY_CHECK_LIMIT,
) -> LaverTable:
    """Fill rows from 2^k down, using a*1 = a+1 and a*(b+1) = (a*b)*(a+1)."""
    if not 0 <= k <= limit:
        raise LaverError(f"k must be between 0 and {limit}, not {k}")
    size = 2 ** k
    rows: dict[int, list[int]] = {size: list(range(1, size + 1))}
    for a in range(size - 1, 0, -1):
        row = [a + 1]
        for _ in range(1, size):
            row.append(rows[row[-1]][a])
        rows[a] = row
    table = make_magma(size, [[v - 1 for v in rows[a]] for a in range(1, size + 1)])
    result = LaverTable(k, table)

    for a in range(1, size + 1):
        if result.product(a, 1) != a % size + 1:
            raise LaverError(f"Row {a} does not start with {a % size + 1}")
    if k <= check_limit and not is_right_distributive(result.shelf()):
        raise LaverError(f"A_{k} is not left self-distributive")
    logging.debug("Built A_%d", k)
    return result


def laver_uniqueness_check(k: int) -> bool:
    """Find every left self-distributive table with a*1 = a+1; expect only A_k."""
    if not 0 <= k <= UNIQUENESS_K_LIMIT:
        raise LaverError(
            f"Exhaustive uniqueness is only feasible for k <= {UNIQUENESS_K_LIMIT}",
        )
    size = 2 ** k
    # On the transpose, a*1 = a+1 fixes the row of element 1.
    fixed = {(0, x): (x + 1) % size for x in range(size)}
    solutions = list(itertools.islice(search_tables(size, Axiom.SHELF, fixed=fixed), 2))
    logging.debug("A_%d: %d solution(s)", k, len(solutions))
    return len(solutions) == 1 and solutions[0] == laver_build(k).shelf()


@dcl.dataclass(frozen=True)
class LaverStructure:
    """Right-fixed pairs and bijective columns of a transposed A_k, 1-indexed."""

    k: int
    right_fixed: tuple[tuple[int, int], ...]
    bijective_columns: tuple[int, ...]
    identity_columns: tuple[int, ...]

    @property
    def expected_right_fixed(self) -> tuple[int, int]:
        return (2 ** self.k - 1, 2 ** self.k)

    def annotations(self) -> list[str]:
        return [
            f"right-fixed (r, c): {', '.join(map(str, self.right_fixed))}",
            f"bijective columns: {' '.join(map(str, self.bijective_columns))}",
            f"identity columns: {' '.join(map(str, self.identity_columns))}",
        ]


def laver_right_structure(k: int, *, limit: int = LAVER_K_LIMIT) -> LaverStructure:
    """Check that 2^k - 1 is right 2^k-fixed and 2^k acts as the identity."""
    if k < 1:
        raise LaverError(f"k must be at least 1, not {k}")
    laver = laver_build(k, limit=limit)
    shelf = laver.shelf()
    size = laver.size
    identity = tuple(range(size))
    structure = LaverStructure(
        k=k,
        right_fixed=tuple(
            sorted((r + 1, c + 1) for r, c in right_fixed_elements(shelf)),
        ),
        bijective_columns=tuple(y + 1 for y in bijective_columns(shelf)),
        identity_columns=tuple(
            y + 1 for y in range(size) if shelf.column(y) == identity
        ),
    )
    if structure.expected_right_fixed not in structure.right_fixed:
        row = laver.rows()[size - 2]
        raise LaverError(f"Row {size - 1} of A_{k} is {row}, not constantly {size}")
    if size not in structure.identity_columns:
        raise LaverError(f"Row {size} of A_{k} is {laver.rows()[-1]}, not the identity")
    return structure


def laver_projection_check(k: int) -> bool:
    """Check that reducing mod 2^(k-1) is a homomorphism from A_k onto A_(k-1)."""
    if k < 1:
        raise LaverError(f"k must be at least 1, not {k}")
    upper = laver_build(k)
    lower = laver_build(k - 1)
    half = lower.size

    def project(a: int) -> int:
        return (a - 1) % half + 1

    return all(
        project(upper.product(a, b)) == lower.product(project(a), project(b))
        for a in range(1, upper.size + 1)
        for b in range(1, upper.size + 1)
    )

