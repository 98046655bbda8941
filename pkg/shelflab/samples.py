"""Published reference structures and the values computed from them."""
import typing as t

from shelflab.homology import HomologyGroup
from shelflab.homology import Theory
from shelflab.magma import FiniteMagma
from shelflab.magma import from_function
from shelflab.magma import make_magma


def row_constant(rows: t.Sequence[int]) -> FiniteMagma:
    """x*y = rows[x]."""
    return from_function(len(rows), lambda x, _: rows[x])


# Published as an associative spindle; as printed it is neither idempotent
# (b*b = a) nor associative, and its right zeros are a, c and d.
CAPTIONED_SPINDLE = make_magma(4, [
    [0, 1, 2, 3],
    [0, 0, 2, 3],
    [0, 0, 2, 3],
    [0, 3, 2, 3],
])

LATIN_SQUARE = make_magma(4, [
    [0, 2, 3, 1],
    [3, 1, 0, 2],
    [1, 3, 2, 0],
    [2, 0, 1, 3],
])

# Associative shelf with right zeros that is not proto-unital: (3*1)*1 != 3*1.
NOT_PROTO_UNITAL = make_magma(4, [
    [0, 0, 2, 3],
    [0, 0, 2, 3],
    [0, 0, 2, 3],
    [0, 2, 2, 3],
])

MIN_CHAIN = from_function(4, min)
ROW_CONSTANT_0003 = row_constant((0, 0, 0, 3))
ROW_CONSTANT_0023 = row_constant((0, 0, 2, 3))
LEFT_PROJECTION = row_constant((0, 1, 2, 3))
THREE_CONSTANT_COLUMNS = make_magma(4, [
    [0, 0, 0, 3],
    [0, 0, 0, 3],
    [0, 0, 2, 3],
    [0, 0, 3, 3],
])
PARITY_BLOCKS = from_function(4, lambda x, y: x % 2 + 2 * (y // 2))
ONE_FIXED_ROW = make_magma(4, [
    [0, 0, 2, 3],
    [0, 1, 2, 3],
    [0, 0, 2, 3],
    [0, 0, 2, 3],
])
RIGHT_PROJECTION = from_function(4, lambda _, y: y)

APPENDIX_SHELVES: dict[str, FiniteMagma] = {
    "min-chain": MIN_CHAIN,
    "row-constant-0003": ROW_CONSTANT_0003,
    "row-constant-0023": ROW_CONSTANT_0023,
    "left-projection": LEFT_PROJECTION,
    "three-constant-columns": THREE_CONSTANT_COLUMNS,
    "parity-blocks": PARITY_BLOCKS,
    "one-fixed-row": ONE_FIXED_ROW,
    "right-projection": RIGHT_PROJECTION,
}


def _free(*ranks: int) -> tuple[HomologyGroup, ...]:
    return tuple(HomologyGroup(rank) for rank in ranks)


# H_0, H_1, H_2 as published.
PUBLISHED_HOMOLOGY: dict[tuple[str, Theory], tuple[HomologyGroup, ...]] = {
    ("three-constant-columns", Theory.ONE_TERM): _free(1, 0, 0),
    ("parity-blocks", Theory.ONE_TERM): _free(2, 4, 16),
    ("one-fixed-row", Theory.ONE_TERM): _free(3, 8, 32),
    ("right-projection", Theory.ONE_TERM): _free(4, 12, 48),
    ("min-chain", Theory.TWO_TERM): _free(1, 1, 1),
    ("row-constant-0003", Theory.TWO_TERM): _free(2, 4, 8),
    ("row-constant-0023", Theory.TWO_TERM): _free(3, 9, 27),
    ("left-projection", Theory.TWO_TERM): _free(4, 16, 64),
}

# Free associative shelf on two letters, in the published element order.
FAS2_WORDS = (
    "a", "b", "ab", "ba", "aa", "bb", "bbb", "abb", "bab", "bba", "aab", "aba",
    "baa", "aaa", "babb", "abaa", "aabb", "bbaa",
)
FAS2_TABLE = (
    (4, 2, 10, 11, 13, 7, 7, 16, 10, 11, 10, 11, 15, 13, 16, 15, 16, 15),
    (3, 5, 8, 9, 12, 6, 6, 14, 8, 9, 8, 9, 17, 12, 14, 17, 14, 17),
    (11, 7, 10, 11, 15, 7, 7, 16, 10, 11, 10, 11, 15, 15, 16, 15, 16, 15),
    (12, 8, 8, 9, 12, 14, 14, 14, 8, 9, 8, 9, 17, 12, 14, 17, 14, 17),
    (13, 10, 10, 11, 13, 16, 16, 16, 10, 11, 10, 11, 15, 13, 16, 15, 16, 15),
    (9, 6, 8, 9, 17, 6, 6, 14, 8, 9, 8, 9, 17, 17, 14, 17, 14, 17),
    (9, 6, 8, 9, 17, 6, 6, 14, 8, 9, 8, 9, 17, 17, 14, 17, 14, 17),
    (11, 7, 10, 11, 15, 7, 7, 16, 10, 11, 10, 11, 15, 15, 16, 15, 16, 15),
    (9, 14, 8, 9, 17, 14, 14, 14, 8, 9, 8, 9, 17, 17, 14, 17, 14, 17),
    (17, 8, 8, 9, 17, 14, 14, 14, 8, 9, 8, 9, 17, 17, 14, 17, 14, 17),
    (11, 16, 10, 11, 15, 16, 16, 16, 10, 11, 10, 11, 15, 15, 16, 15, 16, 15),
    (15, 10, 10, 11, 15, 16, 16, 16, 10, 11, 10, 11, 15, 15, 16, 15, 16, 15),
    (12, 8, 8, 9, 12, 14, 14, 14, 8, 9, 8, 9, 17, 12, 14, 17, 14, 17),
    (13, 10, 10, 11, 13, 16, 16, 16, 10, 11, 10, 11, 15, 13, 16, 15, 16, 15),
    (9, 14, 8, 9, 17, 14, 14, 14, 8, 9, 8, 9, 17, 17, 14, 17, 14, 17),
    (15, 10, 10, 11, 15, 16, 16, 16, 10, 11, 10, 11, 15, 15, 16, 15, 16, 15),
    (11, 16, 10, 11, 15, 16, 16, 16, 10, 11, 10, 11, 15, 15, 16, 15, 16, 15),
    (17, 8, 8, 9, 17, 14, 14, 14, 8, 9, 8, 9, 17, 17, 14, 17, 14, 17),
)

# Free proto-unital shelf on two letters: a, a^2, ab, b, b^2, ba.
FPUS2_TABLE = (
    (1, 1, 2, 2, 2, 5),
    (1, 1, 2, 2, 2, 5),
    (5, 5, 2, 2, 2, 5),
    (5, 5, 2, 4, 4, 5),
    (5, 5, 2, 4, 4, 5),
    (5, 5, 2, 2, 2, 5),
)

# Free pre-unital shelf on two letters: a, b, ab, ba.
FPTUS2_TABLE = (
    (0, 2, 2, 3),
    (3, 1, 2, 3),
    (3, 2, 2, 3),
    (3, 2, 2, 3),
)

PRE_UNITAL_SEQUENCE = (1, 4, 15, 64, 325, 1956)

# Laver tables in the 1-indexed convention.
PUBLISHED_LAVER: dict[int, tuple[tuple[int, ...], ...]] = {
    2: (
        (2, 4, 2, 4),
        (3, 4, 3, 4),
        (4, 4, 4, 4),
        (1, 2, 3, 4),
    ),
    3: (
        (2, 4, 6, 8, 2, 4, 6, 8),
        (3, 4, 7, 8, 3, 4, 7, 8),
        (4, 8, 4, 8, 4, 8, 4, 8),
        (5, 6, 7, 8, 5, 6, 7, 8),
        (6, 8, 6, 8, 6, 8, 6, 8),
        (7, 8, 7, 8, 7, 8, 7, 8),
        (8, 8, 8, 8, 8, 8, 8, 8),
        (1, 2, 3, 4, 5, 6, 7, 8),
    ),
    4: (
        (2, 12, 14, 16, 2, 12, 14, 16, 2, 12, 14, 16, 2, 12, 14, 16),
        (3, 12, 15, 16, 3, 12, 15, 16, 3, 12, 15, 16, 3, 12, 15, 16),
        (4, 8, 12, 16, 4, 8, 12, 16, 4, 8, 12, 16, 4, 8, 12, 16),
        (5, 6, 7, 8, 13, 14, 15, 16, 5, 6, 7, 8, 13, 14, 15, 16),
        (6, 8, 14, 16, 6, 8, 14, 16, 6, 8, 14, 16, 6, 8, 14, 16),
        (7, 8, 15, 16, 7, 8, 15, 16, 7, 8, 15, 16, 7, 8, 15, 16),
        (8, 16, 8, 16, 8, 16, 8, 16, 8, 16, 8, 16, 8, 16, 8, 16),
        (9, 10, 11, 12, 13, 14, 15, 16, 9, 10, 11, 12, 13, 14, 15, 16),
        (10, 12, 14, 16, 10, 12, 14, 16, 10, 12, 14, 16, 10, 12, 14, 16),
        (11, 12, 15, 16, 11, 12, 15, 16, 11, 12, 15, 16, 11, 12, 15, 16),
        (12, 16, 12, 16, 12, 16, 12, 16, 12, 16, 12, 16, 12, 16, 12, 16),
        (13, 14, 15, 16, 13, 14, 15, 16, 13, 14, 15, 16, 13, 14, 15, 16),
        (14, 16, 14, 16, 14, 16, 14, 16, 14, 16, 14, 16, 14, 16, 14, 16),
        (15, 16, 15, 16, 15, 16, 15, 16, 15, 16, 15, 16, 15, 16, 15, 16),
        (16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16, 16),
        (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16),
    ),
}
