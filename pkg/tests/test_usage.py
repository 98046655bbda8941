"""Command line parsing."""
from argparse import ArgumentTypeError
from pathlib import Path

import pytest

from shelflab.axioms import Axiom
from shelflab.usage import ShelfLabParser


@pytest.fixture
def parser():
    return ShelfLabParser()


def test_every_command_parses(parser):
    assert set(ShelfLabParser.COMMANDS) == {
        "axioms", "enumerate", "free", "laver", "spindle", "homology", "verify-paper",
    }
    args = parser.parse_args(["verify-paper", "--deep", "--format", "json"])
    assert args.command == "verify-paper"
    assert args.deep
    assert args.format == "json"


@pytest.mark.parametrize("argv", [
    ["axioms", "t.cay"],
    ["enumerate", "--n", "2", "--axioms", "shelf"],
    ["free", "--kind", "fpus", "--n", "2"],
    ["laver", "--k", "2"],
    ["spindle", "--scan", "3"],
    ["homology", "t.cay", "--theory", "two-term", "--q", "1"],
    ["verify-paper"],
])
def test_subcommands_take_the_common_options(parser, argv):
    args = parser.parse_args([*argv, "--format", "json", "-q", "--no-cache"])
    assert args.command == argv[0]
    assert args.format == "json"
    assert args.quiet
    assert args.no_cache
    assert args.output is None


def test_enumerate(parser):
    args = parser.parse_args(
        ["enumerate", "--n", "3", "--axioms", "shelf,associative", "--mode", "labeled"],
    )
    assert args.n == 3
    assert args.axioms == Axiom.SHELF | Axiom.ASSOCIATIVE
    assert args.mode == "labeled"
    assert not args.allow_override


def test_homology_defaults(parser):
    args = parser.parse_args(["homology", "t.cay", "--theory", "one-term", "--q", "0"])
    assert args.input == Path("t.cay")
    assert args.q == 0
    assert not args.reduced
    assert args.export_matrix is None
    assert args.format == "text"


def test_spindle_needs_exactly_one_source(parser):
    with pytest.raises(SystemExit):
        parser.parse_args(["spindle"])
    with pytest.raises(SystemExit):
        parser.parse_args(["spindle", "--spec", "a.txt", "--scan", "3"])
    assert parser.parse_args(["spindle", "--scan", "3"]).qmax == 2


@pytest.mark.parametrize("argv", [
    [],
    ["laver"],
    ["laver", "--k", "-1"],
    ["enumerate", "--n", "0", "--axioms", "shelf"],
    ["enumerate", "--n", "2", "--axioms", "wobbly"],
    ["free", "--kind", "fxs", "--n", "2"],
    ["laver", "--k", "2", "--quiet", "--debug"],
])
def test_rejected(parser, argv):
    with pytest.raises(SystemExit):
        parser.parse_args(argv)


def test_checkers():
    assert ShelfLabParser.check_positive("4") == 4
    assert ShelfLabParser.check_non_negative("0") == 0
    with pytest.raises(ArgumentTypeError):
        ShelfLabParser.check_positive("0")
    with pytest.raises(ArgumentTypeError):
        ShelfLabParser.check_non_negative("x")
    with pytest.raises(ArgumentTypeError):
        ShelfLabParser.check_axioms("")
