"""Cayley tables, axiom checks and isomorphisms."""
import pytest

from shelflab.axioms import Axiom
from shelflab.enumeration import search_tables
from shelflab.errors import PreconditionError
from shelflab.errors import SizeMismatchError
from shelflab.magma import CanonicalBoundError
from shelflab.magma import MagmaValidationError
from shelflab.magma import adjoin_unit
from shelflab.magma import automorphisms
from shelflab.magma import canonical_form
from shelflab.magma import check_axioms
from shelflab.magma import find_isomorphism
from shelflab.magma import find_unit
from shelflab.magma import from_function
from shelflab.magma import is_associative
from shelflab.magma import isomorphisms
from shelflab.magma import left_zeros
from shelflab.magma import make_magma
from shelflab.magma import permute
from shelflab.magma import remove_unit
from shelflab.magma import right_fixed_elements
from shelflab.magma import right_zeros
from shelflab.magma import satisfies_proto_unital_laws
from shelflab.magma import transpose
from shelflab.samples import CAPTIONED_SPINDLE
from shelflab.samples import LATIN_SQUARE
from shelflab.samples import LEFT_PROJECTION
from shelflab.samples import MIN_CHAIN
from shelflab.samples import NOT_PROTO_UNITAL
from shelflab.samples import RIGHT_PROJECTION
from shelflab.samples import THREE_CONSTANT_COLUMNS

from conftest import NOT_A_SHELF


DIHEDRAL3 = from_function(3, lambda x, y: (2 * y - x) % 3)


@pytest.mark.parametrize(("rows", "message"), [
    ([[0, 1]], "Expected 2 rows"),
    ([[0, 1], [1]], "Row 1 has 1 entries"),
    ([[0, 1], [1, 2]], "outside"),
    ([[0, 1], [1, -1]], "outside"),
    ([[0, 1], [1, "x"]], "not an integer"),
])
def test_validation(rows, message):
    with pytest.raises(MagmaValidationError, match=message):
        make_magma(2, rows)


def test_validation_reports_the_cell():
    with pytest.raises(MagmaValidationError) as info:
        make_magma(2, [[0, 1], [5, 0]])
    assert (info.value.row, info.value.col) == (1, 0)


def test_call_and_columns():
    assert MIN_CHAIN(2, 1) == 1
    assert MIN_CHAIN.column(3) == (0, 1, 2, 3)
    assert RIGHT_PROJECTION.flat()[:4] == (0, 1, 2, 3)
    assert MIN_CHAIN.array.shape == (4, 4)


def test_left_projection_is_an_associative_quandle():
    report = check_axioms(LEFT_PROJECTION)
    assert report.quandle
    assert report.associative
    assert not report.unital
    assert not report.proto_unital
    assert left_zeros(LEFT_PROJECTION) == frozenset(range(4))


def test_right_projection():
    report = check_axioms(RIGHT_PROJECTION)
    assert report.spindle
    assert report.associative
    assert report.pre_unital
    assert not report.rack
    assert not report.unital
    assert right_zeros(RIGHT_PROJECTION) == frozenset(range(4))


def test_min_chain_is_unital():
    report = check_axioms(MIN_CHAIN)
    assert report.unital
    assert report.unit == 3
    assert report.pre_unital
    assert report.associative
    assert report.right_zeros == frozenset({0})


def test_not_proto_unital():
    report = check_axioms(NOT_PROTO_UNITAL)
    assert report.shelf
    assert report.associative
    assert not report.proto_unital
    assert report.right_zeros == frozenset({0, 2, 3})


def test_captioned_spindle_as_printed():
    report = check_axioms(CAPTIONED_SPINDLE)
    assert not report.idempotent
    assert not report.associative
    assert report.right_zeros == frozenset({0, 2, 3})


def test_latin_square_is_a_quasigroup():
    assert check_axioms(LATIN_SQUARE).quasigroup


def test_non_shelf():
    report = check_axioms(NOT_A_SHELF)
    assert not report.shelf
    assert report.unit is None
    assert not report.rack


def test_dihedral_quandle_is_not_associative():
    report = check_axioms(DIHEDRAL3)
    assert report.quandle
    assert not report.associative


def test_right_fixed_elements():
    assert right_fixed_elements(THREE_CONSTANT_COLUMNS) == frozenset(
        {(0, 0), (1, 0), (3, 3)},
    )
    assert right_zeros(THREE_CONSTANT_COLUMNS) == frozenset({0, 3})


def test_flags_and_holds():
    report = check_axioms(MIN_CHAIN)
    flags = report.flags()
    assert report.holds(flags)
    assert "unital" in flags.names()
    assert "rack" not in flags.names()


def test_as_dict_is_plain():
    result = check_axioms(THREE_CONSTANT_COLUMNS).as_dict()
    assert result["right_fixed"] == [[0, 0], [1, 0], [3, 3]]
    assert result["right_zeros"] == [0, 3]


def test_find_unit_needs_both_sides():
    # Row 0 is the identity but column 0 is not.
    magma = make_magma(2, [[0, 1], [0, 0]])
    assert find_unit(magma) is None
    assert find_unit(MIN_CHAIN) == 3


def test_transpose():
    assert transpose(LEFT_PROJECTION) == RIGHT_PROJECTION


def test_permute_gives_an_isomorphism():
    sigma = (2, 0, 3, 1)
    image = permute(MIN_CHAIN, sigma)
    assert find_isomorphism(MIN_CHAIN, image) == sigma


def test_permute_rejects_non_permutations():
    with pytest.raises(PreconditionError):
        permute(MIN_CHAIN, (0, 0, 1, 2))


def test_automorphisms():
    assert automorphisms(MIN_CHAIN) == [(0, 1, 2, 3)]
    group = automorphisms(LEFT_PROJECTION)
    assert len(group) == 24
    assert group[0] == (0, 1, 2, 3)


def test_no_isomorphism_between_projections():
    assert find_isomorphism(LEFT_PROJECTION, RIGHT_PROJECTION) is None


def test_isomorphisms_need_equal_orders():
    with pytest.raises(SizeMismatchError):
        next(isomorphisms(MIN_CHAIN, DIHEDRAL3))


def test_canonical_form_is_an_invariant():
    image = permute(THREE_CONSTANT_COLUMNS, (3, 1, 0, 2))
    assert canonical_form(image) == canonical_form(THREE_CONSTANT_COLUMNS)
    assert canonical_form(image).flat() <= THREE_CONSTANT_COLUMNS.flat()


def test_canonical_form_bound():
    with pytest.raises(CanonicalBoundError):
        canonical_form(MIN_CHAIN, limit=3)


def test_adjoin_and_remove_unit():
    two = from_function(2, min)
    extended = adjoin_unit(two)
    assert extended.order == 3
    assert find_unit(extended) == 2
    assert check_axioms(extended).unital
    assert remove_unit(extended) == two


def test_remove_unit_preconditions():
    with pytest.raises(PreconditionError, match="no unit"):
        remove_unit(LEFT_PROJECTION)
    with pytest.raises(PreconditionError, match="nothing"):
        remove_unit(make_magma(1, [[0]]))


ORDERS = [1, 2, 3, pytest.param(4, marks=pytest.mark.slow)]


@pytest.mark.parametrize("n", ORDERS)
def test_unital_shelves_are_idempotent_and_proto_unital(n):
    found = list(search_tables(n, Axiom.UNITAL))
    assert found
    for magma in found:
        report = check_axioms(magma)
        assert report.idempotent
        assert report.associative
        assert report.pre_unital
        assert satisfies_proto_unital_laws(magma)


@pytest.mark.parametrize("n", ORDERS)
def test_proto_unital_shelves_are_associative(n):
    found = list(search_tables(n, Axiom.PROTO_UNITAL))
    assert found
    assert all(is_associative(magma) for magma in found)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_adjoining_a_unit_makes_pre_unital_shelves_unital(n):
    for magma in search_tables(n, Axiom.PRE_UNITAL):
        extended = adjoin_unit(magma)
        assert check_axioms(extended).unital
        assert remove_unit(extended) == magma


@pytest.mark.parametrize("n", [2, 3, 4])
def test_removing_the_unit_leaves_a_pre_unital_shelf(n):
    found = list(search_tables(n, Axiom.UNITAL))
    assert found
    for magma in found:
        assert check_axioms(remove_unit(magma)).pre_unital


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_right_absorbing_associative_quasigroups_are_trivial(n):
    survivors = [
        magma for magma in search_tables(n, Axiom.ASSOCIATIVE | Axiom.QUASIGROUP)
        if all(
            magma(magma(a, b), b) == magma(a, b)
            for a in magma.elements() for b in magma.elements()
        )
    ]
    assert len(survivors) == (1 if n == 1 else 0)
