"""ArgumentParser for this program."""
from argparse import ArgumentParser
from argparse import ArgumentTypeError
from pathlib import Path

from shelflab.axioms import Axiom
from shelflab.enumeration import Mode
from shelflab.freealg import FreeKind
from shelflab.homology import Theory
from shelflab.version import SHELFLAB_VERSION

__all__ = ["ShelfLabParser"]


class ShelfLabParser(ArgumentParser):
    """ArgumentParser for this program."""

    COMMANDS = (
        "axioms", "enumerate", "free", "laver", "spindle", "homology", "verify-paper",
    )

    def __init__(self):
        super().__init__(
            prog="shelflab",
            description=f"Finite shelves, free shelves and their homology, "
            f"v{SHELFLAB_VERSION}",
        )
        common = self.common_options()
        commands = self.add_subparsers(
            dest="command",
            required=True,
            metavar="COMMAND",
            parser_class=ArgumentParser,
        )

        parser = commands.add_parser(
            "axioms", parents=[common],
            help="Report the axioms a Cayley table satisfies",
        )
        parser.add_argument("input", type=Path, help="Cayley table (.cay)")
        parser.add_argument(
            "--canonical",
            action="store_true",
            help="Also print the canonical relabeling",
        )

        parser = commands.add_parser(
            "enumerate", parents=[common], help="Count magmas satisfying axioms",
        )
        parser.add_argument("--n", type=self.check_positive, required=True)
        parser.add_argument(
            "--axioms",
            type=self.check_axioms,
            required=True,
            metavar="LIST",
            help="Comma-separated axioms, e.g. shelf,associative",
        )
        parser.add_argument(
            "--mode",
            choices=[mode.value for mode in Mode],
            default=Mode.ISO.value,
            help="Count labeled tables or isomorphism classes",
        )
        parser.add_argument(
            "--witnesses",
            type=Path,
            metavar="FILE",
            help="Write the tables found to FILE (.cay blocks)",
        )
        parser.add_argument(
            "--allow-override",
            action="store_true",
            help="Allow one order above the usual enumeration limit",
        )

        parser = commands.add_parser(
            "free", parents=[common], help="Build a free structure on n letters",
        )
        parser.add_argument(
            "--kind", choices=[kind.value for kind in FreeKind], required=True,
        )
        parser.add_argument("--n", type=self.check_positive, required=True)
        parser.add_argument(
            "--legend",
            type=Path,
            metavar="FILE",
            help="Write the element legend to FILE",
        )
        parser.add_argument(
            "--max-len",
            type=self.check_positive,
            help="Word length bound for the free associative shelf",
        )

        parser = commands.add_parser(
            "laver", parents=[common], help="Build the Laver table A_k",
        )
        parser.add_argument("--k", type=self.check_non_negative, required=True)
        parser.add_argument(
            "--transpose",
            action="store_true",
            help="Print the right self-distributive transpose",
        )
        parser.add_argument(
            "--annotate",
            action="store_true",
            help="Add the right-fixed and identity-column report",
        )
        parser.add_argument(
            "--one-indexed",
            action="store_true",
            help="Print elements as 1..2^k",
        )

        parser = commands.add_parser(
            "spindle", parents=[common], help="Build or scan f-block spindles",
        )
        group = parser.add_mutually_exclusive_group(required=True)
        group.add_argument(
            "--spec", type=Path, metavar="FILE", help="Block specification file",
        )
        group.add_argument(
            "--scan",
            type=self.check_positive,
            metavar="N",
            help="Scan every spec of total size <= N with a singleton block",
        )
        parser.add_argument(
            "--qmax",
            type=self.check_non_negative,
            default=2,
            help="Highest two-term degree in a scan",
        )

        parser = commands.add_parser(
            "homology", parents=[common], help="Homology of a finite shelf",
        )
        parser.add_argument("input", type=Path, help="Cayley table (.cay)")
        parser.add_argument(
            "--theory", choices=[theory.value for theory in Theory], required=True,
        )
        parser.add_argument("--q", type=self.check_non_negative, required=True)
        parser.add_argument(
            "--reduced",
            action="store_true",
            help="Reduced one-term homology",
        )
        parser.add_argument(
            "--export-matrix",
            type=Path,
            metavar="FILE",
            help="Write the boundary from degree q+1 as triplets",
        )

        parser = commands.add_parser(
            "verify-paper", parents=[common], help="Recompute every published result",
        )
        parser.add_argument(
            "--deep",
            action="store_true",
            help="Degree-3 homology and the free associative shelf on 3 letters",
        )

    @staticmethod
    def common_options() -> ArgumentParser:
        """Options shared by every subcommand."""
        common = ArgumentParser(add_help=False)
        common.add_argument(
            "--format",
            choices=["text", "json"],
            default="text",
            help="Output format",
        )
        common.add_argument(
            "-o",
            "--output",
            type=Path,
            metavar="FILE",
            help="Write results to FILE instead of stdout",
        )
        group = common.add_mutually_exclusive_group()
        group.add_argument(
            "-q",
            "--quiet",
            action="store_true",
            help="No banner, warnings only",
        )
        group.add_argument(
            "-d",
            "--debug",
            action="store_true",
            help="Print interesting debug information",
        )
        common.add_argument(
            "--settings",
            type=Path,
            metavar="INI",
            help="Settings file with a [Limits] section",
        )
        common.add_argument(
            "--write-settings",
            action="store_true",
            help="Write the effective limits back to the settings file",
        )
        common.add_argument(
            "--no-cache",
            action="store_true",
            help="Ignore $SHELFLAB_CACHE for this run",
        )
        return common

    @staticmethod
    def check_axioms(value: str) -> Axiom:
        """Validate --axioms argument"""
        try:
            return Axiom.parse(value)
        except ValueError as exc:
            raise ArgumentTypeError(str(exc)) from None

    @staticmethod
    def check_positive(value: str) -> int:
        """Validate a positive integer argument"""
        if not value.isdigit() or int(value) < 1:
            raise ArgumentTypeError(f"Expected a positive integer, not {value!r}")
        return int(value)

    @staticmethod
    def check_non_negative(value: str) -> int:
        """Validate a non-negative integer argument"""
        if not value.isdigit():
            raise ArgumentTypeError(f"Expected a non-negative integer, not {value!r}")
        return int(value)
