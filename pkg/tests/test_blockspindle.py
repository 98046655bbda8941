"""Block spindles and the spindle scan."""
import pytest

from shelflab.blockspindle import BlockSpec
from shelflab.blockspindle import BlockSpecError
from shelflab.blockspindle import enumerate_block_specs
from shelflab.blockspindle import format_block_spec
from shelflab.blockspindle import make_block_spindle
from shelflab.blockspindle import parse_block_spec
from shelflab.blockspindle import read_block_spec
from shelflab.blockspindle import self_maps_up_to_conjugacy
from shelflab.blockspindle import torsion_witness_scan
from shelflab.errors import PreconditionError
from shelflab.magma import check_axioms
from shelflab.magma import right_zeros


SINGLETON_AND_SWAP = BlockSpec(((0,), (1, 0)))


def test_spec_properties():
    assert SINGLETON_AND_SWAP.sizes == (1, 2)
    assert SINGLETON_AND_SWAP.total == 3
    assert SINGLETON_AND_SWAP.offsets() == [0, 1]
    assert SINGLETON_AND_SWAP.has_singleton()
    assert BlockSpec.identity([2, 3]).functions == ((0, 1), (0, 1, 2))


@pytest.mark.parametrize("functions", [(), ((),), ((0, 2),)])
def test_bad_specs(functions):
    with pytest.raises(BlockSpecError):
        BlockSpec(functions)


def test_spindle_table():
    spindle = make_block_spindle(SINGLETON_AND_SWAP)
    assert spindle.table == ((0, 2, 1), (0, 1, 2), (0, 1, 2))
    report = check_axioms(spindle)
    assert report.spindle
    assert right_zeros(spindle) == frozenset({0})


@pytest.mark.parametrize("spec", [
    BlockSpec(((0, 0, 1), (1, 1))),
    BlockSpec(((1, 2, 0), (0,), (0, 0))),
    BlockSpec.identity([2, 2]),
])
def test_every_block_spindle_is_a_spindle(spec):
    assert check_axioms(make_block_spindle(spec)).spindle


def test_size_limit():
    with pytest.raises(PreconditionError, match="above the limit 4"):
        make_block_spindle(BlockSpec.identity([3, 2]), limit=4)


def test_text_format():
    text = "# two blocks\n1: 0\n\n2: 1 0\n"
    spec = parse_block_spec(text)
    assert spec == SINGLETON_AND_SWAP
    assert format_block_spec(spec) == "1: 0\n2: 1 0\n"
    assert parse_block_spec(format_block_spec(spec)) == spec


@pytest.mark.parametrize(("text", "line"), [
    ("2: 0\n", 1),
    ("1: 0\nx: 0\n", 2),
    ("3 0 1 2\n", 1),
    ("2: 0 2\n", 1),
    ("# nothing\n", 1),
])
def test_text_errors(text, line):
    with pytest.raises(BlockSpecError) as info:
        parse_block_spec(text)
    assert info.value.line == line


def test_self_maps():
    assert self_maps_up_to_conjugacy(1) == [(0,)]
    assert self_maps_up_to_conjugacy(2) == [(0, 0), (0, 1), (1, 0)]
    assert len(self_maps_up_to_conjugacy(3)) == 7


def test_enumerate_specs():
    assert len(enumerate_block_specs(2)) == 2
    assert len(enumerate_block_specs(2, require_singleton=False)) == 5
    specs = enumerate_block_specs(4)
    assert all(spec.has_singleton() and spec.total <= 4 for spec in specs)
    assert len(set(specs)) == len(specs)


def test_scan_with_singletons():
    specs = enumerate_block_specs(3)
    scan = torsion_witness_scan(specs, qmax=1)
    assert len(scan.entries) == len(specs)
    assert scan.two_term_failures() == []
    assert all(entry.has_right_zero for entry in scan.entries)
    assert all(entry.two_term_is_integers for entry in scan.entries)


def test_scan_without_a_singleton():
    scan = torsion_witness_scan([BlockSpec(((0, 1),))], qmax=1)
    (entry,) = scan.entries
    assert entry.two_term is None
    assert entry.two_term_is_integers is None
    assert scan.two_term_failures() == []


def test_scan_limit():
    with pytest.raises(PreconditionError):
        torsion_witness_scan([BlockSpec.identity([5, 4])])


def test_enumeration_limit_comes_first():
    with pytest.raises(PreconditionError):
        enumerate_block_specs(9)
    with pytest.raises(PreconditionError):
        enumerate_block_specs(4, limit=3)


def test_read_spec(tmp_path):
    path = tmp_path / "spec.txt"
    path.write_text(format_block_spec(SINGLETON_AND_SWAP), encoding="UTF-8")
    assert read_block_spec(path) == SINGLETON_AND_SWAP
    path.write_bytes(b"1: 0\n\xfe: 1 0\n")
    with pytest.raises(BlockSpecError):
        read_block_spec(path)
