"""Spindles glued from blocks: x*y is y inside a block and f_j(y) across blocks.

Text format, one block per line: "size: f(0) f(1) ... f(size-1)".
"""
import dataclasses as dcl
import itertools
import logging
from pathlib import Path
import typing as t

from shelflab.cayley import ENCODING
from shelflab.errors import PreconditionError
from shelflab.errors import ShelfLabError
from shelflab.homology import BOUNDARY_COLUMN_CAP
from shelflab.homology import HomologyGroup
from shelflab.homology import Theory
from shelflab.homology import homology
from shelflab.homology import homology_groups
from shelflab.magma import FiniteMagma
from shelflab.magma import make_magma
from shelflab.magma import right_zeros


SPINDLE_SIZE_LIMIT = 64
SCAN_SIZE_LIMIT = 8

SelfMap = tuple[int, ...]


class BlockSpecError(ShelfLabError):
    """We raise this for inconsistent or malformed block specifications."""

    def __init__(self, message: str, line: int | None = None) -> None:
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


@dcl.dataclass(frozen=True)
class BlockSpec:
    """Block sizes and, for each block, a self-map of {0, ..., size-1}."""

    functions: tuple[SelfMap, ...]

    def __post_init__(self) -> None:
        if not self.functions:
            raise BlockSpecError("At least one block is required")
        for i, function in enumerate(self.functions):
            if not function:
                raise BlockSpecError(f"Block {i} is empty")
            for value in function:
                if not 0 <= value < len(function):
                    raise BlockSpecError(
                        f"Block {i} maps into {value}, outside [0, {len(function)})",
                    )

    @classmethod
    def identity(cls, sizes: t.Iterable[int]) -> "BlockSpec":
        return cls(tuple(tuple(range(size)) for size in sizes))

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(function) for function in self.functions)

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def has_singleton(self) -> bool:
        return 1 in self.sizes

    def offsets(self) -> list[int]:
        return list(itertools.accumulate(self.sizes, initial=0))[:-1]


def make_block_spindle(
    spec: BlockSpec, *, limit: int = SPINDLE_SIZE_LIMIT,
) -> FiniteMagma:
    """Lay the blocks out consecutively and tabulate the product."""
    if spec.total > limit:
        raise PreconditionError(f"Total size {spec.total} is above the limit {limit}")
    block_of: list[int] = []
    offset_of: list[int] = []
    for i, size in enumerate(spec.sizes):
        block_of.extend([i] * size)
        offset_of.extend(range(size))
    starts = spec.offsets()

    def product(x: int, y: int) -> int:
        j = block_of[y]
        if block_of[x] == j:
            return y
        return starts[j] + spec.functions[j][offset_of[y]]

    n = spec.total
    return make_magma(n, [[product(x, y) for y in range(n)] for x in range(n)])


def parse_block_spec(text: str) -> BlockSpec:
    functions = []
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        size_text, colon, values_text = stripped.partition(":")
        if not colon:
            raise BlockSpecError("Expected 'size: f(0) ... f(size-1)'", number)
        try:
            size = int(size_text)
            values = tuple(int(v) for v in values_text.split())
        except ValueError:
            raise BlockSpecError("Non-integer value", number) from None
        if len(values) != size:
            raise BlockSpecError(
                f"Block of size {size} lists {len(values)} values", number,
            )
        if any(not 0 <= v < size for v in values):
            raise BlockSpecError(f"Values must be in [0, {size})", number)
        functions.append(values)
    if not functions:
        raise BlockSpecError("No blocks found", 1)
    return BlockSpec(tuple(functions))


def read_block_spec(path: Path) -> BlockSpec:
    logging.debug("Reading %s", path)
    try:
        text = path.read_text(encoding=ENCODING)
    except UnicodeDecodeError as exc:
        raise BlockSpecError(f"{path} is not {ENCODING} text") from exc
    return parse_block_spec(text)


def format_block_spec(spec: BlockSpec) -> str:
    return "".join(
        f"{len(function)}: {' '.join(map(str, function))}\n"
        for function in spec.functions
    )


def self_maps_up_to_conjugacy(size: int) -> list[SelfMap]:
    """One representative (the lexicographically least) per conjugacy class."""
    seen: set[SelfMap] = set()
    representatives = []
    for function in itertools.product(range(size), repeat=size):
        if function in seen:
            continue
        orbit = set()
        for sigma in itertools.permutations(range(size)):
            conjugate = [0] * size
            for x in range(size):
                conjugate[sigma[x]] = sigma[function[x]]
            orbit.add(tuple(conjugate))
        seen |= orbit
        representatives.append(min(orbit))
    return sorted(representatives)


def enumerate_block_specs(
    max_total: int,
    *,
    require_singleton: bool = True,
    limit: int = SCAN_SIZE_LIMIT,
) -> list[BlockSpec]:
    """Every spec of total size <= max_total, up to block order and relabeling."""
    if max_total > limit:
        raise PreconditionError(f"Scan specs are limited to size {limit}")
    maps = {size: self_maps_up_to_conjugacy(size) for size in range(1, max_total + 1)}
    blocks = sorted(
        (size, function) for size, functions in maps.items() for function in functions
    )
    specs = []

    def extend(start: int, chosen: list[SelfMap], total: int) -> None:
        if chosen and (not require_singleton or any(len(f) == 1 for f in chosen)):
            specs.append(BlockSpec(tuple(chosen)))
        for index in range(start, len(blocks)):
            size, function = blocks[index]
            if total + size > max_total:
                break
            extend(index, [*chosen, function], total + size)

    extend(0, [], 0)
    logging.debug("%d block specs of total size <= %d", len(specs), max_total)
    return specs


@dcl.dataclass(frozen=True)
class SpindleScanEntry:
    spec: BlockSpec
    one_term_h2: HomologyGroup
    two_term: tuple[HomologyGroup, ...] | None
    has_right_zero: bool

    @property
    def two_term_is_integers(self) -> bool | None:
        """None when the spec has no singleton block and nothing is claimed."""
        if self.two_term is None:
            return None
        return all(group.is_integers() for group in self.two_term)


@dcl.dataclass
class SpindleScan:
    entries: list[SpindleScanEntry] = dcl.field(default_factory=list)

    def torsion_witnesses(self) -> list[SpindleScanEntry]:
        return [entry for entry in self.entries if entry.one_term_h2.torsion]

    def two_term_failures(self) -> list[SpindleScanEntry]:
        return [entry for entry in self.entries if entry.two_term_is_integers is False]


def torsion_witness_scan(
    specs: t.Iterable[BlockSpec],
    *,
    qmax: int = 2,
    limit: int = SCAN_SIZE_LIMIT,
    cap: int = BOUNDARY_COLUMN_CAP,
) -> SpindleScan:
    """One-term H_2 of every spec; two-term H_0..H_qmax if it has a singleton block."""
    scan = SpindleScan()
    for spec in specs:
        if spec.total > limit:
            raise PreconditionError(f"Scan specs are limited to size {limit}")
        spindle = make_block_spindle(spec)
        two_term = None
        if spec.has_singleton():
            two_term = tuple(homology_groups(spindle, Theory.TWO_TERM, qmax, cap=cap))
        entry = SpindleScanEntry(
            spec=spec,
            one_term_h2=homology(spindle, Theory.ONE_TERM, 2, cap=cap),
            two_term=two_term,
            has_right_zero=bool(right_zeros(spindle)),
        )
        if entry.one_term_h2.torsion:
            logging.info("Torsion %s for %s", entry.one_term_h2, spec.sizes)
        scan.entries.append(entry)
    return scan
