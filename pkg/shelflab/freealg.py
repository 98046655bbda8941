"""Free associative, proto-unital, pre-unital and unital shelves on n letters.

Words are tuples of letter indices; "a" is 0, "b" is 1 and so on.
"""
import collections
import dataclasses as dcl
import enum
from fractions import Fraction
import functools
import itertools
import logging
import math
import random
import typing as t

import pandas as pd

from shelflab.axioms import Axiom
from shelflab.errors import PreconditionError
from shelflab.errors import ShelfLabError
from shelflab.magma import FiniteMagma
from shelflab.magma import check_axioms
from shelflab.magma import make_magma
from shelflab.magma import right_zeros
from shelflab.series import PowerSeries
from shelflab.unionfind import DisjointSet


FAS_ORDER_LIMIT = 3
FREE_ORDER_LIMIT = 5
EGF_TERMS_LIMIT = 20
FAS_COUNT_LIMIT = 12

Word = tuple[int, ...]


class WordError(ShelfLabError):
    """We raise this for words outside the domain of an operation."""


class FreeStructureError(ShelfLabError):
    """We raise this when a free structure cannot be built as asked."""


class UnstableClosureError(FreeStructureError):
    """The bounded congruence closure changed when the bound was raised."""


class FreeKind(enum.Enum):
    """The free structures we know how to build."""

    FAS = "fas"
    FPUS = "fpus"
    FPTUS = "fptus"
    FUS = "fus"

    @property
    def promises(self) -> Axiom:
        """Axioms every table of this kind satisfies."""
        return {
            FreeKind.FAS: Axiom.SHELF | Axiom.ASSOCIATIVE,
            FreeKind.FPUS: Axiom.PROTO_UNITAL | Axiom.ASSOCIATIVE,
            FreeKind.FPTUS: Axiom.PRE_UNITAL | Axiom.ASSOCIATIVE,
            FreeKind.FUS: Axiom.UNITAL | Axiom.ASSOCIATIVE,
        }[self]


def letter(index: int) -> str:
    return chr(ord("a") + index) if index < 26 else f"x{index}"  # noqa: PLR2004


def word_name(word: Word) -> str:
    """Human-readable form, e.g. (0, 0, 1) is "a^2b"; the empty word is "1"."""
    if not word:
        return "1"
    parts = []
    for value, run in itertools.groupby(word):
        count = len(list(run))
        parts.append(letter(value) + (f"^{count}" if count > 1 else ""))
    return "".join(parts)


def format_word(word: Word) -> str:
    """Dotted serialization, e.g. (0, 1, 0) is "0.1.0"."""
    return ".".join(str(x) for x in word)


def parse_word(text: str, alphabet_size: int | None = None) -> Word:
    """Inverse of format_word; letters a-z are accepted too."""
    text = text.strip()
    if not text:
        return ()
    try:
        if "." in text or text.isdigit():
            word = tuple(int(part) for part in text.split("."))
        else:
            word = tuple(ord(ch) - ord("a") for ch in text)
    except ValueError as exc:
        raise WordError(f"Cannot parse word {text!r}") from exc
    if any(x < 0 or (alphabet_size is not None and x >= alphabet_size) for x in word):
        raise WordError(f"Word {text!r} has letters outside the alphabet")
    return word


def _shortlex(word: Word) -> tuple[int, Word]:
    return (len(word), word)


@dcl.dataclass(frozen=True)
class FreeStructureTable:
    """Normal forms of a free structure and their multiplication table."""

    kind: FreeKind
    alphabet_size: int
    elements: tuple[Word, ...]
    magma: FiniteMagma

    @functools.cached_property
    def _positions(self) -> dict[Word, int]:
        return {word: i for i, word in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, word: Word) -> int:
        """Position of a normal form."""
        try:
            return self._positions[tuple(word)]
        except KeyError:
            raise WordError(f"{word_name(word)} is not a normal form") from None

    def multiply(self, first: int, second: int) -> int:
        return self.magma(first, second)

    def classify(self, word: t.Sequence[int]) -> int:
        """Element represented by an arbitrary word, by folding in its letters."""
        if not word:
            if self.kind is FreeKind.FUS:
                return self.index(())
            raise WordError("Only the free unital shelf contains the empty word")
        if any(not 0 <= x < self.alphabet_size for x in word):
            raise WordError(f"{tuple(word)} has letters outside the alphabet")
        current = self.index((word[0],))
        for value in word[1:]:
            current = self.magma(current, self.index((value,)))
        return current

    def verify(self) -> bool:
        """Check the axioms this kind promises."""
        report = check_axioms(self.magma)
        ok = report.holds(self.kind.promises)
        if not ok:
            logging.warning(
                "%s(%d) fails %s", self.kind.name, self.alphabet_size,
                self.kind.promises.names(),
            )
        return ok

    def right_zero_words(self) -> set[Word]:
        return {self.elements[z] for z in right_zeros(self.magma)}

    def legend(self) -> str:
        """One "index<TAB>dotted<TAB>name" line per element."""
        return "".join(
            f"{i}\t{format_word(word)}\t{word_name(word)}\n"
            for i, word in enumerate(self.elements)
        )


def _tabulate(
    kind: FreeKind,
    n: int,
    elements: list[Word],
    product: t.Callable[[Word, Word], Word],
) -> FreeStructureTable:
    positions = {word: i for i, word in enumerate(elements)}
    table = []
    for first in elements:
        row = []
        for second in elements:
            result = product(first, second)
            if result not in positions:
                raise FreeStructureError(
                    f"{word_name(first)} * {word_name(second)} = "
                    f"{word_name(result)} is not a listed normal form",
                )
            row.append(positions[result])
        table.append(row)
    magma = make_magma(len(elements), table)
    return FreeStructureTable(kind, n, tuple(elements), magma)


def _check_order(n: int, limit: int) -> None:
    if n < 1:
        raise PreconditionError(f"Alphabet size must be positive, not {n}")
    if n > limit:
        raise FreeStructureError(f"Alphabet size {n} is above the limit of {limit}")


# Free associative shelves

def default_fas_length(n: int) -> int:
    return 6 if n == 1 else 8


def _fas_closure(n: int, max_len: int) -> DisjointSet[Word]:
    """Classes of words of length <= max_len under xyc ~ xcyc in any context.

    x and c are letters, y is a non-empty word.
    """
    classes: DisjointSet[Word] = DisjointSet()
    for length in range(1, max_len + 1):
        for word in itertools.product(range(n), repeat=length):
            classes.make_set(word)
    merges = 0
    for length in range(3, max_len):
        for word in itertools.product(range(n), repeat=length):
            for i in range(length - 2):
                for j in range(i + 2, length):
                    head, middle, c = word[:i + 1], word[i + 1:j], word[j]
                    expanded = head + (c,) + middle + (c,) + word[j + 1:]
                    merges += classes.union(word, expanded)
    logging.debug("FAS(%d) closure to length %d: %d merges", n, max_len, merges)
    return classes


def _fas_table(n: int, max_len: int) -> FreeStructureTable:
    classes = _fas_closure(n, max_len)
    representative: dict[Word, Word] = {}
    for members in classes.classes():
        representative[classes.find(members[0])] = min(members, key=_shortlex)

    def element(word: Word) -> Word:
        if len(word) > max_len:
            raise UnstableClosureError(
                f"FAS({n}) needs words longer than {max_len}; raise max_len",
            )
        return representative[classes.find(word)]

    found = {element((a,)) for a in range(n)}
    frontier = list(found)
    while frontier:
        word = frontier.pop()
        for a in range(n):
            following = element(word + (a,))
            if following not in found:
                found.add(following)
                frontier.append(following)

    elements = sorted(found, key=_shortlex)

    def product(first: Word, second: Word) -> Word:
        current = first
        for a in second:
            current = element(current + (a,))
        return current

    return _tabulate(FreeKind.FAS, n, elements, product)


def fas_build(
    n: int,
    max_len: int | None = None,
    *,
    limit: int = FAS_ORDER_LIMIT,
    check_stability: bool = True,
) -> FreeStructureTable:
    """The free associative shelf on n letters, by bounded congruence closure.

    Unless told otherwise, the table is rebuilt with max_len + 1 and must
    come out the same.
    """
    _check_order(n, limit)
    if max_len is None:
        max_len = default_fas_length(n)
    if max_len < 4:  # noqa: PLR2004
        raise PreconditionError(f"max_len must be at least 4, not {max_len}")
    result = _fas_table(n, max_len)
    if check_stability:
        bigger = _fas_table(n, max_len + 1)
        if bigger.elements != result.elements or bigger.magma != result.magma:
            raise UnstableClosureError(
                f"FAS({n}) changes between lengths {max_len} and {max_len + 1} "
                f"({len(result)} vs {len(bigger)} elements); raise max_len",
            )
    logging.info("FAS(%d) has %d elements", n, len(result))
    return result


def fas_key_identity_check(n: int, fas: FreeStructureTable | None = None) -> bool:
    """Check abba ~ aba for all distinct letters a, b (aaaa ~ aaa when n = 1)."""
    if fas is None:
        fas = fas_build(n)
    if n == 1:
        return fas.classify((0, 0, 0, 0)) == fas.classify((0, 0, 0))
    return all(
        fas.classify((a, b, b, a)) == fas.classify((a, b, a))
        for a, b in itertools.permutations(range(n), 2)
    )


def normal_form_census(fas: FreeStructureTable) -> collections.Counter[str]:
    """Sort representatives into the three repeat-free-based shapes, or "other"."""

    def repeat_free(word: Word) -> bool:
        return len(set(word)) == len(word)

    def prefixed(word: Word) -> bool:
        return len(word) > 1 and repeat_free(word[1:]) and word[0] in word[1:]

    census: collections.Counter[str] = collections.Counter()
    for word in fas.elements:
        if repeat_free(word):
            census["repeat-free"] += 1
        elif prefixed(word):
            census["letter-prefixed"] += 1
        elif word[-1:] == word[-2:-1] and prefixed(word[:-1]):
            census["doubled-last"] += 1
        else:
            census["other"] += 1
    return census


# Counting

@dcl.dataclass(frozen=True)
class CountSequence:
    """A named integer sequence together with how it was obtained."""

    name: str
    method: str
    values: tuple[int, ...]
    start: int = 0

    def __getitem__(self, n: int) -> int:
        return self.values[n - self.start]

    def as_dict(self) -> dict[int, int]:
        return {self.start + i: v for i, v in enumerate(self.values)}


def fas_recursion(nmax: int) -> list[int]:
    """c_0 .. c_nmax from c_n = (n+2)c_(n-1) - (n-1)c_(n-2) + 3n, c_0 = 0, c_1 = 3."""
    values = [0, 3]
    for n in range(2, nmax + 1):
        values.append((n + 2) * values[n - 1] - (n - 1) * values[n - 2] + 3 * n)
    return values[:nmax + 1]


def fas_closed_form_printed(n: int) -> int:
    """3n + sum over i = 2..n of (i+1)! C(n, i); disagrees with the table sizes."""
    return 3 * n + sum(math.factorial(i + 1) * math.comb(n, i) for i in range(2, n + 1))


def fas_one_term_printed(nmax: int) -> list[Fraction]:
    """c_n = n^2/(n-1) c_(n-1) + n(n-1) from c_1 = 3; disagrees from n = 2 on."""
    values = [Fraction(0), Fraction(3)]
    for n in range(2, nmax + 1):
        values.append(Fraction(n * n, n - 1) * values[n - 1] + n * (n - 1))
    return values[:nmax + 1]


def pre_unital_recursion(nmax: int) -> list[int]:
    """b_0 .. b_nmax from b_n = n b_(n-1) + n, b_0 = 0."""
    values = [0]
    for n in range(1, nmax + 1):
        values.append(n * values[-1] + n)
    return values


def arrangements(n: int) -> int:
    """Number of repeat-free words over n letters, the empty word included."""
    return sum(math.factorial(k) * math.comb(n, k) for k in range(n + 1))


def egf_coefficients(
    kind: FreeKind, terms: int, *, limit: int = EGF_TERMS_LIMIT,
) -> list[int]:
    """n! [x^n] of the generating function of |kind(n)|, for n = 0..terms."""
    if terms > limit:
        raise PreconditionError(f"At most {limit} terms, not {terms}")
    precision = terms + 1
    x = PowerSeries.polynomial([0, 1], precision)
    exp = PowerSeries.exp(precision)
    geometric = PowerSeries.geometric(precision)
    series = {
        FreeKind.FAS: PowerSeries.polynomial([0, 3, 0, -1], precision)
        * exp * geometric * geometric,
        FreeKind.FPUS: PowerSeries.polynomial([0, 2, -1], precision) * exp * geometric,
        FreeKind.FPTUS: x * exp * geometric,
        FreeKind.FUS: exp * geometric,
    }[kind]
    return series.egf_terms()


def fas_counts(
    nmax: int,
    *,
    direct_max: int = FAS_ORDER_LIMIT,
    limit: int = FAS_COUNT_LIMIT,
) -> dict[str, CountSequence]:
    """FAS sizes by construction, by the two-term recursion and by the EGF."""
    if nmax > limit:
        raise PreconditionError(f"nmax is limited to {limit}, not {nmax}")
    direct = tuple(len(fas_build(n)) for n in range(1, min(nmax, direct_max) + 1))
    recursion = fas_recursion(nmax)
    egf = egf_coefficients(FreeKind.FAS, nmax)
    if recursion != egf:
        logging.warning("FAS recursion %s and EGF %s disagree", recursion, egf)
    return {
        "direct": CountSequence("c_n", "direct", direct, start=1),
        "recursion": CountSequence("c_n", "recursion", tuple(recursion)),
        "egf": CountSequence("c_n", "egf", tuple(egf)),
    }


def fas_diagnostics(nmax: int, *, direct_max: int = 2) -> pd.DataFrame:
    """Every FAS size formula side by side, plus the census of built normal forms."""
    recursion = fas_recursion(nmax)
    one_term = fas_one_term_printed(nmax)
    egf = egf_coefficients(FreeKind.FAS, nmax)
    rows = []
    for n in range(1, nmax + 1):
        row: dict[str, t.Any] = {
            "n": n,
            "two_term_recursion": recursion[n],
            "egf": egf[n],
            "closed_form_printed": fas_closed_form_printed(n),
            "one_term_printed": str(one_term[n]),
            "direct": None,
        }
        if n <= direct_max:
            fas = fas_build(n)
            row["direct"] = len(fas)
            row.update(normal_form_census(fas))
        rows.append(row)
    return pd.DataFrame(rows).set_index("n")


# Free proto-unital shelves

_Rule = t.Callable[[Word], Word | None]


def _drop_repeated_square(word: Word) -> Word | None:
    """xyy -> xy."""
    for i in range(len(word) - 2):
        if word[i + 1] == word[i + 2]:
            return word[:i + 2] + word[i + 3:]
    return None


def _drop_sandwich(word: Word) -> Word | None:
    """yxy -> xy."""
    for i in range(len(word) - 2):
        if word[i] == word[i + 2]:
            return word[:i] + word[i + 1:]
    return None


def _drop_earlier(word: Word) -> Word | None:
    """awa -> wa, w non-empty."""
    for i, a in enumerate(word):
        for j in range(i + 2, len(word)):
            if word[j] == a:
                return word[:i] + word[i + 1:]
    return None


def _drop_leading_square(word: Word) -> Word | None:
    """xxy -> xy."""
    for i in range(len(word) - 2):
        if word[i] == word[i + 1]:
            return word[:i] + word[i + 1:]
    return None


FPUS_RULES: tuple[_Rule, ...] = (
    _drop_repeated_square, _drop_sandwich, _drop_earlier, _drop_leading_square,
)


def fpus_reduce(word: t.Sequence[int], rng: random.Random | None = None) -> Word:
    """Rewrite to a fixed point; rules are tried in order, or shuffled by rng."""
    current = tuple(word)
    if not current:
        raise WordError("The empty word is not an element of FPUS")
    rules = list(FPUS_RULES)
    while True:
        if rng is not None:
            rng.shuffle(rules)
        for rule in rules:
            if (rewritten := rule(current)) is not None:
                current = rewritten
                break
        else:
            return current


def fpus_normal_form(word: t.Sequence[int]) -> Word:
    """Keep the last occurrence of each letter; a single repeated letter is a^2."""
    word = tuple(word)
    if not word:
        raise WordError("The empty word is not an element of FPUS")
    if len(set(word)) == 1:
        return word[:2]
    last = {x: i for i, x in enumerate(word)}
    return tuple(x for i, x in enumerate(word) if last[x] == i)


def fpus_elements(n: int) -> list[Word]:
    """a, a^2, then the repeat-free words of length >= 2, grouped by first letter."""
    words = [(a,) for a in range(n)] + [(a, a) for a in range(n)]
    for size in range(2, n + 1):
        words.extend(itertools.permutations(range(n), size))
    return sorted(words, key=lambda w: (w[0], len(set(w)), w))


def fpus_size(n: int) -> int:
    return n + arrangements(n) - 1


def fpus_build(n: int, *, limit: int = FREE_ORDER_LIMIT) -> FreeStructureTable:
    """The free proto-unital shelf on n letters."""
    _check_order(n, limit)
    result = _tabulate(
        FreeKind.FPUS, n, fpus_elements(n),
        lambda first, second: fpus_normal_form(first + second),
    )
    logging.info("FPUS(%d) has %d elements", n, len(result))
    return result


def fpus_right_zeros(n: int, *, limit: int = FREE_ORDER_LIMIT) -> set[Word]:
    """Elements z with x*z == z for every x."""
    return fpus_build(n, limit=limit).right_zero_words()


# Free pre-unital and unital shelves

def _require_repeat_free(word: Word, *, allow_empty: bool = False) -> None:
    if not word and not allow_empty:
        raise WordError("Empty word")
    if len(set(word)) != len(word):
        raise WordError(f"{word_name(word)} repeats a letter")


def fptus_multiply(first: t.Sequence[int], second: t.Sequence[int]) -> Word:
    """Delete from the first word the letters of the second, then juxtapose."""
    first, second = tuple(first), tuple(second)
    _require_repeat_free(first)
    _require_repeat_free(second)
    return _delete_then_join(first, second)


def _delete_then_join(first: Word, second: Word) -> Word:
    letters = set(second)
    return tuple(x for x in first if x not in letters) + second


def fptus_elements(n: int, *, with_empty: bool = False) -> list[Word]:
    words: list[Word] = [()] if with_empty else []
    for size in range(1, n + 1):
        words.extend(itertools.permutations(range(n), size))
    return sorted(words, key=_shortlex)


def fptus_build(n: int, *, limit: int = FREE_ORDER_LIMIT) -> FreeStructureTable:
    """The free pre-unital shelf: repeat-free non-empty words."""
    _check_order(n, limit)
    return _tabulate(FreeKind.FPTUS, n, fptus_elements(n), _delete_then_join)


def fus_build(n: int, *, limit: int = FREE_ORDER_LIMIT) -> FreeStructureTable:
    """The free unital shelf: the free pre-unital shelf plus the empty word as unit."""
    _check_order(n, limit)
    return _tabulate(
        FreeKind.FUS, n, fptus_elements(n, with_empty=True), _delete_then_join,
    )


def build(kind: FreeKind, n: int, **kwargs: t.Any) -> FreeStructureTable:
    """Dispatch on kind."""
    builders: dict[FreeKind, t.Callable[..., FreeStructureTable]] = {
        FreeKind.FAS: fas_build,
        FreeKind.FPUS: fpus_build,
        FreeKind.FPTUS: fptus_build,
        FreeKind.FUS: fus_build,
    }
    return builders[kind](n, **kwargs)
