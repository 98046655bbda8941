#!/usr/bin/env python3
"""Finite shelves, their free relatives, Laver tables and distributive homology."""
import argparse
import dataclasses as dcl
import json
import logging
from pathlib import Path
import sys
import typing as t

import pandas as pd

from shelflab.blockspindle import BlockSpec
from shelflab.blockspindle import BlockSpecError
from shelflab.blockspindle import enumerate_block_specs
from shelflab.blockspindle import format_block_spec
from shelflab.blockspindle import make_block_spindle
from shelflab.blockspindle import read_block_spec
from shelflab.blockspindle import torsion_witness_scan
from shelflab.cache import Cache
from shelflab.cayley import ENCODING
from shelflab.cayley import CayleyFormatError
from shelflab.cayley import format_cayley
from shelflab.cayley import format_cayley_blocks
from shelflab.cayley import read_cayley
from shelflab.enumeration import EnumerationQuery
from shelflab.enumeration import Mode
from shelflab.enumeration import enumerate_magmas
from shelflab.enumeration import orbit_count
from shelflab.errors import ShelfLabError
from shelflab.freealg import FreeKind
from shelflab.freealg import build
from shelflab.homology import Theory
from shelflab.homology import boundary_matrix
from shelflab.homology import homology
from shelflab.ini import Limits
from shelflab.ini import SettingsError
from shelflab.ini import SettingsFile
from shelflab.laver import laver_build
from shelflab.laver import laver_right_structure
from shelflab.magma import FiniteMagma
from shelflab.magma import canonical_form
from shelflab.magma import check_axioms
from shelflab.output import IOutput
from shelflab.output import create_output
from shelflab.usage import ShelfLabParser
from shelflab.verify import verify_paper
from shelflab.version import SHELFLAB_VERSION


EXIT_SUCCESS = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# Problems with what the user handed us, as opposed to what we computed.
INPUT_ERRORS = (CayleyFormatError, BlockSpecError, SettingsError, OSError)


def main() -> None:
    """Entry point."""
    sys.exit(ShelfLab().run())


class ShelfLab:
    """Parse the command line, compute, write the results.

    Every subcommand writes into an IOutput, so what ends up on stdout (or in
    the cache) is one rendered document.
    """

    UNCACHED_COMMANDS = frozenset({"verify-paper"})
    SIDE_FILES = ("witnesses", "legend", "export_matrix")
    PRESENTATION_ARGS = frozenset({
        "output", "quiet", "debug", "settings", "write_settings", "no_cache",
    })

    args: argparse.Namespace
    block_spec: BlockSpec | None = None
    cache: Cache
    exit_code: int = EXIT_SUCCESS
    limits: Limits
    magma: FiniteMagma | None = None
    parser: ShelfLabParser
    rendered: str
    settings: SettingsFile
    writer: IOutput

    def run(self, argv: t.Sequence[str] | None = None) -> int:
        """Do it."""
        try:
            self.parse_command_line(argv)
        except SystemExit as exc:
            return exc.code if isinstance(exc.code, int) else EXIT_USAGE
        self.configure_logging()
        logging.info("shelflab v%s", SHELFLAB_VERSION)
        try:
            self.read_settings()
            self.read_input()
            self.compute()
            self.write_output()
            self.write_settings()
        except INPUT_ERRORS as exc:
            logging.error("%s", exc)
            return EXIT_USAGE
        except ShelfLabError as exc:
            logging.error("%s", exc)
            return EXIT_FAILURE
        return self.exit_code

    def parse_command_line(self, argv: t.Sequence[str] | None) -> None:
        """Find out what we're supposed to do."""
        parser = self.parser = ShelfLabParser()
        self.args = parser.parse_args(argv)

        if self.args.no_cache:
            self.cache = Cache()
        else:
            self.cache = Cache.from_environment()

    def configure_logging(self) -> None:
        """Set logging level and format."""
        if self.args.debug:
            level = logging.DEBUG
        elif self.args.quiet:
            level = logging.WARNING
        else:
            level = logging.INFO
        logging.basicConfig(format="%(asctime)s %(message)s", level=level)
        logging.getLogger().setLevel(level)

    def read_settings(self) -> None:
        """Read the ini file, if any."""
        path = self.args.settings or Path(SettingsFile.DEFAULT_NAME)
        self.settings = SettingsFile(path)
        self.limits = self.settings.limits()
        logging.debug("Limits: %s", self.limits)

    def read_input(self) -> None:
        """Parse input files up front, so bad input fails before any work."""
        if getattr(self.args, "input", None) is not None:
            self.magma = read_cayley(self.args.input)
        if getattr(self.args, "spec", None) is not None:
            self.block_spec = read_block_spec(self.args.spec)

    def request_key(self) -> bytes:
        """Everything that determines the output, in canonical form."""
        request = {
            key: value for key, value in sorted(vars(self.args).items())
            if key not in self.PRESENTATION_ARGS
        }
        if self.magma is not None:
            request["input"] = format_cayley(self.magma)
        if self.block_spec is not None:
            request["spec"] = format_block_spec(self.block_spec)
        request["limits"] = dcl.asdict(self.limits)
        request["version"] = SHELFLAB_VERSION
        return json.dumps(request, sort_keys=True, default=str).encode()

    def cacheable(self) -> bool:
        if self.args.command in self.UNCACHED_COMMANDS:
            return False
        return not any(getattr(self.args, name, None) for name in self.SIDE_FILES)

    def compute(self) -> None:
        """Run the subcommand, or fetch its output from the cache."""
        cached = None
        if self.cacheable():
            cached = self.cache.name(self.request_key, ".out")
            if (hit := self.cache.get(cached)) is not None:
                self.rendered = hit
                return

        self.writer = create_output(self.args.format, self.args.command)
        commands: dict[str, t.Callable[[], None]] = {
            "axioms": self.command_axioms,
            "enumerate": self.command_enumerate,
            "free": self.command_free,
            "laver": self.command_laver,
            "spindle": self.command_spindle,
            "homology": self.command_homology,
            "verify-paper": self.command_verify_paper,
        }
        commands[self.args.command]()
        self.rendered = self.writer.render()
        self.cache.put(self.rendered, cached)

    def write_output(self) -> None:
        """Write to --output or stdout."""
        if self.args.output:
            logging.info("Writing %s", self.args.output)
            self.args.output.write_text(self.rendered, encoding=ENCODING)
        else:
            sys.stdout.write(self.rendered)

    def write_settings(self) -> None:
        """Write the effective limits back, if asked to."""
        if self.args.write_settings:
            self.settings.update_limits(self.limits)
            self.settings.backup_and_write()

    def write_side_file(self, path: Path, text: str) -> None:
        logging.info("Writing %s", path)
        path.write_text(text, encoding=ENCODING)

    # Subcommands

    def command_axioms(self) -> None:
        assert self.magma is not None
        report = check_axioms(self.magma)
        fields = {"order": self.magma.order, "axioms": ",".join(report.flags().names())}
        fields.update(report.as_dict())
        self.writer.write_fields(fields)
        if self.args.canonical:
            canonical = canonical_form(self.magma, self.limits.canonical_order)
            self.writer.write_magma(canonical, ["canonical form"])

    def command_enumerate(self) -> None:
        query = EnumerationQuery(
            self.args.n, self.args.axioms, Mode(self.args.mode),
        )
        report = enumerate_magmas(
            query,
            witnesses=True if self.args.witnesses else None,
            allow_override=self.args.allow_override,
            limit=self.limits.enumeration_order,
            override_limit=self.limits.enumeration_override_order,
            canonical_limit=self.limits.canonical_order,
        )
        fields = report.as_dict()
        if query.mode is Mode.ISO and report.witnesses is not None:
            fields["labeled_from_orbits"] = orbit_count(report.witnesses)
        self.writer.write_fields(fields)
        if self.args.witnesses:
            self.write_side_file(
                self.args.witnesses, format_cayley_blocks(report.witnesses or []),
            )

    def command_free(self) -> None:
        kind = FreeKind(self.args.kind)
        kwargs: dict[str, t.Any] = {"limit": self.limits.free_order}
        if kind is FreeKind.FAS:
            kwargs = {"limit": self.limits.fas_order, "max_len": self.args.max_len}
        table = build(kind, self.args.n, **kwargs)
        self.writer.write_fields(
            {"kind": kind.value, "n": self.args.n, "size": len(table)},
        )
        self.writer.write_magma(table.magma, [f"{kind.name}({self.args.n})"])
        self.writer.write_text(table.legend())
        if self.args.legend:
            self.write_side_file(self.args.legend, table.legend())

    def command_laver(self) -> None:
        k = self.args.k
        laver = laver_build(k, limit=self.limits.laver_k)
        magma = laver.shelf() if self.args.transpose else laver.magma
        comments = [f"A_{k}" + (", transposed" if self.args.transpose else "")]
        if self.args.annotate:
            comments.extend(
                laver_right_structure(k, limit=self.limits.laver_k).annotations(),
            )
        offset = 1 if self.args.one_indexed else 0
        self.writer.write_magma(magma, comments, offset=offset)

    def command_spindle(self) -> None:
        if self.block_spec is not None:
            magma = make_block_spindle(self.block_spec, limit=self.limits.spindle_size)
            self.writer.write_magma(
                magma, [f"block sizes {' '.join(map(str, self.block_spec.sizes))}"],
            )
            return

        specs = enumerate_block_specs(self.args.scan, limit=self.limits.scan_size)
        scan = torsion_witness_scan(
            specs,
            qmax=self.args.qmax,
            limit=self.limits.scan_size,
            cap=self.limits.boundary_column_cap,
        )
        frame = pd.DataFrame([
            {
                "spec": format_block_spec(entry.spec).strip().replace("\n", " | "),
                "one_term_h2": str(entry.one_term_h2),
                "two_term": ", ".join(str(g) for g in entry.two_term or ()),
                "right_zero": entry.has_right_zero,
            }
            for entry in scan.entries
        ])
        self.writer.write_fields({
            "specs": len(scan.entries),
            "torsion_witnesses": len(scan.torsion_witnesses()),
            "two_term_failures": len(scan.two_term_failures()),
        })
        self.writer.write_frame("scan", frame)

    def command_homology(self) -> None:
        assert self.magma is not None
        theory = Theory(self.args.theory)
        group = homology(
            self.magma, theory, self.args.q,
            reduced=self.args.reduced, cap=self.limits.boundary_column_cap,
        )
        fields = {
            "theory": theory.value,
            "q": self.args.q,
            "reduced": self.args.reduced,
            "group": str(group),
        }
        fields.update(group.as_dict())
        self.writer.write_fields(fields)
        if self.args.export_matrix:
            matrix = boundary_matrix(
                self.magma, theory, self.args.q + 1,
                cap=self.limits.boundary_column_cap,
            )
            self.write_side_file(self.args.export_matrix, matrix.to_triplets())

    def command_verify_paper(self) -> None:
        report = verify_paper(deep=self.args.deep, limits=self.limits)
        self.writer.write_fields({
            "passed": report.passed,
            "checks": len(report.checks),
            "failures": len(report.failures()),
        })
        self.writer.write_frame("checks", report.to_frame())
        if not report.passed:
            self.exit_code = EXIT_FAILURE


if __name__ == "__main__":
    main()
