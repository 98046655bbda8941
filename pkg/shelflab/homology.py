"""One-term distributive homology and two-term (rack) homology of finite shelves.

The chain group C_q is free on (q+1)-tuples of elements, ordered
lexicographically with the first coordinate most significant.
"""
import dataclasses as dcl
import enum
import itertools
import logging
import typing as t

from shelflab.errors import PreconditionError
from shelflab.errors import ShelfLabError
from shelflab.intmatrix import IntMatrix
from shelflab.intmatrix import SparseEntries
from shelflab.intmatrix import sparse_invariant_factors
from shelflab.magma import FiniteMagma
from shelflab.magma import bijective_columns
from shelflab.magma import is_associative
from shelflab.magma import is_right_distributive
from shelflab.magma import left_zeros
from shelflab.magma import right_fixed_elements


BOUNDARY_COLUMN_CAP = 200_000

Simplex = tuple[int, ...]
Chain = dict[Simplex, int]


class NotAShelfError(ShelfLabError):
    """We raise this when homology is requested for a non-shelf."""


class BoundaryCapError(ShelfLabError):
    """We raise this when a chain group has more generators than allowed."""


class HomologyError(ShelfLabError):
    """We raise this for meaningless homology requests."""


class Theory(enum.Enum):
    """Which boundary to build from the shelf operation."""

    ONE_TERM = "one-term"
    TWO_TERM = "two-term"


@dcl.dataclass(frozen=True)
class HomologyGroup:
    """Z^free_rank plus Z/d for every d in torsion (each dividing the next)."""

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) or "0"

    def is_trivial(self) -> bool:
        return not self.free_rank and not self.torsion

    def is_integers(self) -> bool:
        """True for the group Z."""
        return self.free_rank == 1 and not self.torsion

    def as_dict(self) -> dict[str, t.Any]:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def require_shelf(magma: FiniteMagma) -> None:
    if not is_right_distributive(magma):
        raise NotAShelfError("The operation is not right self-distributive")


def face(
    magma: FiniteMagma, theory: Theory, i: int, simplex: Simplex,
) -> list[tuple[Simplex, int]]:
    """The i-th face of a basis tuple, as (tuple, coefficient) pairs."""
    if not 0 <= i < len(simplex):
        raise PreconditionError(f"No face {i} of a {len(simplex)}-tuple")
    deleted = simplex[:i] + simplex[i + 1:]
    if i == 0:
        return [] if theory is Theory.TWO_TERM else [(deleted, 1)]
    pivot = simplex[i]
    acted = tuple(magma.table[x][pivot] for x in simplex[:i]) + simplex[i + 1:]
    if theory is Theory.ONE_TERM:
        return [(acted, 1)]
    if acted == deleted:
        return []
    return [(deleted, 1), (acted, -1)]


def _accumulate(chain: Chain, simplex: Simplex, coefficient: int) -> None:
    value = chain.get(simplex, 0) + coefficient
    if value:
        chain[simplex] = value
    else:
        chain.pop(simplex, None)


def face_map(magma: FiniteMagma, theory: Theory, i: int, chain: Chain) -> Chain:
    """Apply the i-th face map to a formal chain."""
    result: Chain = {}
    for simplex, coefficient in chain.items():
        for image, sign in face(magma, theory, i, simplex):
            _accumulate(result, image, sign * coefficient)
    return result


def boundary(magma: FiniteMagma, theory: Theory, chain: Chain) -> Chain:
    """The alternating sum of all face maps."""
    result: Chain = {}
    for simplex, coefficient in chain.items():
        if len(simplex) < 2:  # noqa: PLR2004
            continue
        for i in range(len(simplex)):
            for image, sign in face(magma, theory, i, simplex):
                _accumulate(result, image, (-1) ** i * sign * coefficient)
    return result


def _index(simplex: Simplex, order: int) -> int:
    index = 0
    for x in simplex:
        index = index * order + x
    return index


def chain_rank(magma: FiniteMagma, q: int) -> int:
    """Number of generators of C_q."""
    return magma.order ** (q + 1) if q >= 0 else 0


def _boundary_entries(
    magma: FiniteMagma, theory: Theory, q: int, cap: int,
) -> tuple[SparseEntries, int, int]:
    if q < 0:
        raise PreconditionError(f"Degree must be non-negative, not {q}")
    rows, cols = chain_rank(magma, q - 1), chain_rank(magma, q)
    if cols > cap:
        raise BoundaryCapError(
            f"C_{q} has {cols} generators, more than the cap of {cap}",
        )
    entries: SparseEntries = {}
    if q == 0:
        return entries, rows, cols
    n = magma.order
    for column, simplex in enumerate(itertools.product(range(n), repeat=q + 1)):
        for i in range(q + 1):
            for image, sign in face(magma, theory, i, simplex):
                key = (_index(image, n), column)
                value = entries.get(key, 0) + (-1) ** i * sign
                if value:
                    entries[key] = value
                else:
                    entries.pop(key, None)
    logging.debug("Boundary %s q=%d: %dx%d", theory.value, q, rows, cols)
    return entries, rows, cols


def boundary_matrix(
    magma: FiniteMagma, theory: Theory, q: int, cap: int = BOUNDARY_COLUMN_CAP,
) -> IntMatrix:
    """The matrix of the boundary C_q -> C_(q-1); C_(-1) is zero."""
    require_shelf(magma)
    entries, rows, cols = _boundary_entries(magma, theory, q, cap)
    return IntMatrix.from_sparse(entries, rows, cols)


def homology_groups(
    magma: FiniteMagma,
    theory: Theory,
    qmax: int,
    *,
    reduced: bool = False,
    cap: int = BOUNDARY_COLUMN_CAP,
) -> list[HomologyGroup]:
    """H_0 through H_qmax, computing each boundary once."""
    if reduced and theory is not Theory.ONE_TERM:
        raise HomologyError("Reduced homology is defined for the one-term theory only")
    require_shelf(magma)
    ranks: list[int] = []
    factors: list[list[int]] = []
    for q in range(qmax + 2):
        entries, rows, cols = _boundary_entries(magma, theory, q, cap)
        rank, invariants = sparse_invariant_factors(entries, rows, cols)
        ranks.append(rank)
        factors.append(invariants)

    groups = []
    for q in range(qmax + 1):
        free = chain_rank(magma, q) - ranks[q] - ranks[q + 1]
        if reduced and q == 0:
            free -= 1
        torsion = tuple(d for d in factors[q + 1] if d > 1)
        groups.append(HomologyGroup(free, torsion))
    logging.debug(
        "%s homology of order-%d shelf: %s",
        theory.value, magma.order, ", ".join(str(g) for g in groups),
    )
    return groups


def homology(
    magma: FiniteMagma,
    theory: Theory,
    q: int,
    *,
    reduced: bool = False,
    cap: int = BOUNDARY_COLUMN_CAP,
) -> HomologyGroup:
    """H_q = ker(boundary_q) / im(boundary_(q+1))."""
    if reduced and theory is not Theory.ONE_TERM:
        raise HomologyError("Reduced homology is defined for the one-term theory only")
    if q < 0:
        raise PreconditionError(f"Degree must be non-negative, not {q}")
    require_shelf(magma)
    ranks = []
    torsion: tuple[int, ...] = ()
    for degree in (q, q + 1):
        entries, rows, cols = _boundary_entries(magma, theory, degree, cap)
        rank, invariants = sparse_invariant_factors(entries, rows, cols)
        ranks.append(rank)
        torsion = tuple(d for d in invariants if d > 1)
    free = chain_rank(magma, q) - ranks[0] - ranks[1]
    if reduced and q == 0:
        free -= 1
    return HomologyGroup(free, torsion)


def presimplicial_holds(magma: FiniteMagma, theory: Theory, q: int) -> bool:
    """Check d_i d_j == d_(j-1) d_i for i < j on every generator of C_q."""
    for simplex in itertools.product(range(magma.order), repeat=q + 1):
        chain = {simplex: 1}
        for j in range(1, q + 1):
            after_j = face_map(magma, theory, j, chain)
            for i in range(j):
                left = face_map(magma, theory, i, after_j)
                after_i = face_map(magma, theory, i, chain)
                right = face_map(magma, theory, j - 1, after_i)
                if left != right:
                    logging.debug("d_%d d_%d fails on %s", i, j, simplex)
                    return False
    return True


def chain_homotopy_verify(
    magma: FiniteMagma, r: int, c: int, qmax: int,
    cap: int = BOUNDARY_COLUMN_CAP,
) -> bool:
    """Check that t -> (-1)^(q+1) (t, r) contracts the two-term complex onto c.

    On every generator t of C_q, q <= qmax, the boundary of the homotopy
    plus the homotopy of the boundary must equal t - (c, ..., c); the
    constant chains (c, ..., c) must be cycles.
    """
    if (r, c) not in right_fixed_elements(magma):
        raise PreconditionError(f"({r}, {c}) is not a right-fixed pair")
    if chain_rank(magma, qmax + 1) > cap:
        raise BoundaryCapError(f"Degree {qmax + 1} exceeds the cap of {cap}")
    theory = Theory.TWO_TERM

    def homotopy(chain: Chain) -> Chain:
        result: Chain = {}
        for simplex, coefficient in chain.items():
            sign = -1 if len(simplex) % 2 else 1
            _accumulate(result, (*simplex, r), sign * coefficient)
        return result

    for q in range(qmax + 1):
        constant = (c,) * (q + 1)
        if boundary(magma, theory, {constant: 1}):
            logging.debug("Constant chain %s is not a cycle", constant)
            return False
        for simplex in itertools.product(range(magma.order), repeat=q + 1):
            chain = {simplex: 1}
            total = boundary(magma, theory, homotopy(chain))
            for image, coefficient in homotopy(boundary(magma, theory, chain)).items():
                _accumulate(total, image, coefficient)
            expected: Chain = {}
            _accumulate(expected, simplex, 1)
            _accumulate(expected, constant, -1)
            if total != expected:
                logging.debug("Homotopy identity fails on %s", simplex)
                return False
    return True


@dcl.dataclass(frozen=True)
class TheoremHypotheses:
    """Which vanishing hypotheses a shelf satisfies."""

    bijective_columns: tuple[int, ...]
    left_zeros: frozenset[int]
    right_fixed: frozenset[tuple[int, int]]

    @property
    def one_term_vanishes(self) -> bool:
        """Reduced one-term homology is expected to vanish."""
        return bool(self.bijective_columns or self.left_zeros)

    @property
    def two_term_is_integers(self) -> bool:
        """Two-term homology is expected to be Z in every degree."""
        return bool(self.right_fixed)


def theorem_hypotheses(magma: FiniteMagma) -> TheoremHypotheses:
    return TheoremHypotheses(
        bijective_columns=bijective_columns(magma),
        left_zeros=left_zeros(magma),
        right_fixed=right_fixed_elements(magma),
    )


@dcl.dataclass(frozen=True)
class ScanEntry:
    index: int
    theory: Theory
    q: int
    group: HomologyGroup


@dcl.dataclass
class TorsionScan:
    """Every group computed by torsion_scan, in input order."""

    entries: list[ScanEntry] = dcl.field(default_factory=list)

    def occurrences(self) -> list[ScanEntry]:
        """Entries whose group has torsion."""
        return [entry for entry in self.entries if entry.group.torsion]


def torsion_scan(
    magmas: t.Iterable[FiniteMagma],
    theories: t.Iterable[Theory],
    qmax: int,
    cap: int = BOUNDARY_COLUMN_CAP,
) -> TorsionScan:
    """Compute homology through qmax and collect any torsion; never asserts."""
    theories = list(theories)
    scan = TorsionScan()
    for index, magma in enumerate(magmas):
        if not is_associative(magma):
            raise PreconditionError(f"Input {index} is not associative")
        require_shelf(magma)
        for theory in theories:
            for q, group in enumerate(homology_groups(magma, theory, qmax, cap=cap)):
                scan.entries.append(ScanEntry(index, theory, q, group))
    for entry in scan.occurrences():
        logging.warning(
            "Torsion in %s H_%d of input %d: %s",
            entry.theory.value, entry.q, entry.index, entry.group,
        )
    return scan
