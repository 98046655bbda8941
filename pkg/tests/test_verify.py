"""The published-results suite, group by group at a shallow depth."""
import pytest

from shelflab.verify import Check
from shelflab.verify import Depth
from shelflab.verify import ResultVerifier
from shelflab.verify import VerificationReport
from shelflab.verify import verify_paper
from shelflab.ini import Limits


SHALLOW = Depth(
    max_order=3,
    shelf_order=3,
    proto_unital_order=3,
    spindle_total=4,
    snf_samples=30,
    snf_size=6,
)


@pytest.fixture
def verifier():
    return ResultVerifier(SHALLOW)


@pytest.mark.parametrize("group", [
    "check_reference_tables",
    "check_free_tables",
    "check_free_counts",
    "check_enumeration",
    "check_laver",
    "check_appendix_homology",
    "check_smith_normal_form",
    "check_structure",
    "check_torsion_searches",
])
def test_group_passes(verifier, group):
    verifier.run_group(group, getattr(verifier, group))
    report = verifier.report
    assert report.checks
    assert report.failures() == [], report.failures()


@pytest.mark.slow
def test_vanishing_theorems(verifier):
    verifier.run_group("vanishing theorems", verifier.check_vanishing_theorems)
    assert verifier.report.failures() == []
    names = [check.name for check in verifier.report.checks]
    assert any("bijective column or a left zero" in name for name in names)


@pytest.mark.slow
def test_chain_complexes(verifier):
    verifier.run_group("chain complexes", verifier.check_chain_complexes)
    assert verifier.report.failures() == []


def test_a_raising_group_fails_as_a_whole():
    verifier = ResultVerifier(SHALLOW, Limits(laver_k=1))
    verifier.run_group("laver", verifier.check_laver)
    (failure,) = verifier.report.failures()
    assert failure.name == "completed"
    assert not verifier.report.passed


def test_report_bookkeeping():
    report = VerificationReport([
        Check("b", "second", True),
        Check("a", "first", False),
        Check("a", "noted", True, "detail", binding=False),
    ])
    assert not report.passed
    assert [check.name for check in report.failures()] == ["first"]
    frame = report.to_frame()
    assert frame["name"].tolist() == ["first", "noted", "second"]
    assert list(frame.columns) == ["group", "name", "passed", "detail", "binding"]


def test_expect_records_both_values(verifier):
    verifier.group = "demo"
    assert not verifier.expect("sizes", [1, 2], [1, 3])
    (check,) = verifier.report.checks
    assert check.detail == "computed [1, 2], expected [1, 3]"
    verifier.note("remark", "only reported")
    assert verifier.report.failures() == [check]


def test_default_depth_reaches_the_published_bounds():
    depth = Depth()
    assert depth.shelf_order == 4
    assert depth.proto_unital_order == 5
    assert depth.spindle_total == 6


def test_deep_depth():
    deep = Depth.deep()
    assert deep.max_degree == 3
    assert deep.fas_order == 3
    assert deep.shelf_order == 4
    assert deep.spindle_total == 6


@pytest.mark.slow
def test_whole_suite():
    report = verify_paper()
    assert report.passed, report.failures()
