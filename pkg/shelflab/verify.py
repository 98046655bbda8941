"""Recompute every published table, count and homology group, and compare.

Each check is either binding (a mismatch fails the run) or report-only.
"""
import dataclasses as dcl
import itertools
import logging
import math
import typing as t

import numpy as np
import pandas as pd

from shelflab.axioms import Axiom
from shelflab.blockspindle import enumerate_block_specs
from shelflab.blockspindle import torsion_witness_scan
from shelflab.enumeration import EnumerationQuery
from shelflab.enumeration import Mode
from shelflab.enumeration import PUBLISHED_COUNTS
from shelflab.enumeration import enumerate_magmas
from shelflab.enumeration import count_table
from shelflab.enumeration import search_tables
from shelflab.errors import ShelfLabError
from shelflab.freealg import FreeKind
from shelflab.freealg import egf_coefficients
from shelflab.freealg import fas_build
from shelflab.freealg import fas_key_identity_check
from shelflab.freealg import fas_recursion
from shelflab.freealg import fptus_build
from shelflab.freealg import fpus_build
from shelflab.freealg import fpus_right_zeros
from shelflab.freealg import fus_build
from shelflab.freealg import parse_word
from shelflab.freealg import pre_unital_recursion
from shelflab.homology import HomologyGroup
from shelflab.homology import Theory
from shelflab.homology import boundary_matrix
from shelflab.homology import chain_homotopy_verify
from shelflab.homology import homology_groups
from shelflab.homology import presimplicial_holds
from shelflab.homology import theorem_hypotheses
from shelflab.homology import torsion_scan
from shelflab.ini import Limits
from shelflab.intmatrix import IntMatrix
from shelflab.intmatrix import smith_normal_form
from shelflab.laver import laver_build
from shelflab.laver import laver_projection_check
from shelflab.laver import laver_right_structure
from shelflab.laver import laver_uniqueness_check
from shelflab.magma import FiniteMagma
from shelflab.magma import check_axioms
from shelflab.magma import right_fixed_elements
from shelflab.magma import right_zeros
from shelflab import samples


@dcl.dataclass(frozen=True)
class Depth:
    """How far each family of checks goes."""

    max_order: int = 4
    max_degree: int = 2
    fas_order: int = 2
    shelf_order: int = 4
    proto_unital_order: int = 5
    spindle_total: int = 6
    laver_structure_k: int = 8
    snf_samples: int = 1000
    snf_size: int = 12

    @classmethod
    def deep(cls) -> "Depth":
        return cls(max_degree=3, fas_order=3)


@dcl.dataclass(frozen=True)
class Check:
    group: str
    name: str
    passed: bool
    detail: str = ""
    binding: bool = True


@dcl.dataclass
class VerificationReport:
    checks: list[Check] = dcl.field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks if check.binding)

    def failures(self) -> list[Check]:
        return [check for check in self.checks if check.binding and not check.passed]

    def to_frame(self) -> pd.DataFrame:
        frame = pd.DataFrame(
            [dcl.asdict(check) for check in self.checks],
            columns=[field.name for field in dcl.fields(Check)],
        )
        frame = frame.sort_values(["group", "name"], kind="stable")
        return frame.reset_index(drop=True)


def _groups(values: t.Iterable[HomologyGroup]) -> str:
    return ", ".join(str(group) for group in values)


class ResultVerifier:
    """Runs the checks group by group; a group that raises fails as a whole."""

    def __init__(self, depth: Depth | None = None, limits: Limits | None = None):
        self.depth = depth or Depth()
        self.limits = limits or Limits()
        self.report = VerificationReport()
        self.group = ""

    def expect(self, name: str, computed: t.Any, expected: t.Any) -> bool:
        passed = computed == expected
        detail = str(computed)
        if not passed:
            detail = f"computed {computed}, expected {expected}"
        self.report.checks.append(Check(self.group, name, passed, detail))
        if not passed:
            logging.warning("%s / %s: %s", self.group, name, detail)
        return passed

    def confirm(self, name: str, passed: bool, detail: str = "") -> bool:
        self.report.checks.append(Check(self.group, name, passed, detail))
        if not passed:
            logging.warning("%s / %s failed %s", self.group, name, detail)
        return passed

    def note(self, name: str, detail: str) -> None:
        self.report.checks.append(Check(self.group, name, True, detail, binding=False))

    def run(self) -> VerificationReport:
        for group, method in (
            ("reference tables", self.check_reference_tables),
            ("free structures", self.check_free_tables),
            ("free counts", self.check_free_counts),
            ("enumeration", self.check_enumeration),
            ("laver", self.check_laver),
            ("appendix homology", self.check_appendix_homology),
            ("vanishing theorems", self.check_vanishing_theorems),
            ("chain complexes", self.check_chain_complexes),
            ("smith normal form", self.check_smith_normal_form),
            ("structure", self.check_structure),
            ("torsion searches", self.check_torsion_searches),
        ):
            self.run_group(group, method)
        logging.info(
            "%d checks, %d binding failures",
            len(self.report.checks), len(self.report.failures()),
        )
        return self.report

    def run_group(self, group: str, method: t.Callable[[], None]) -> None:
        logging.info("Checking %s", group)
        self.group = group
        try:
            method()
        except ShelfLabError as exc:
            self.confirm("completed", False, str(exc))

    # Individual groups

    def check_reference_tables(self) -> None:
        report = check_axioms(samples.CAPTIONED_SPINDLE)
        self.note(
            "captioned associative spindle",
            f"idempotent={report.idempotent} associative={report.associative} "
            f"right zeros={sorted(report.right_zeros)}",
        )
        self.confirm("latin square", check_axioms(samples.LATIN_SQUARE).quasigroup)
        report = check_axioms(samples.NOT_PROTO_UNITAL)
        self.confirm(
            "associative shelf with right zeros, not proto-unital",
            report.shelf and report.associative and not report.proto_unital,
        )
        self.expect("its right zeros", sorted(report.right_zeros), [0, 2, 3])

    def check_free_tables(self) -> None:
        fas1 = fas_build(1, limit=self.limits.fas_order)
        self.expect("FAS(1) elements", list(fas1.elements), [(0,), (0, 0), (0, 0, 0)])
        fas2 = fas_build(2, limit=self.limits.fas_order)
        self.expect("FAS(2) size", len(fas2), len(samples.FAS2_WORDS))
        indices = [fas2.classify(parse_word(word)) for word in samples.FAS2_WORDS]
        self.expect("FAS(2) published words distinct", len(set(indices)), len(indices))
        mismatches = [
            (i, j)
            for i, j in itertools.product(range(len(indices)), repeat=2)
            if fas2.multiply(indices[i], indices[j])
            != indices[samples.FAS2_TABLE[i][j]]
        ]
        self.expect("FAS(2) table", mismatches, [])
        self.confirm("FAS(2) axioms", fas2.verify())
        self.confirm("FAS(2) abba = aba", fas_key_identity_check(2, fas2))
        if self.depth.fas_order >= 3:  # noqa: PLR2004
            fas3 = fas_build(3, limit=self.limits.fas_order)
            self.expect("FAS(3) size", len(fas3), 93)

        fpus = fpus_build(2, limit=self.limits.free_order)
        self.expect("FPUS(2) table", fpus.magma.table, samples.FPUS2_TABLE)
        fptus = fptus_build(2, limit=self.limits.free_order)
        self.expect("F~PUS(2) table", fptus.magma.table, samples.FPTUS2_TABLE)
        for build in (fpus, fptus, fus_build(2, limit=self.limits.free_order)):
            self.confirm(f"{build.kind.name}(2) axioms", build.verify())

        for n in range(1, 5):
            zeros = fpus_right_zeros(n, limit=self.limits.free_order)
            expected = math.factorial(n) if n > 1 else 1
            self.expect(f"FPUS({n}) right zeros", len(zeros), expected)
        self.expect("FPUS(1) right zero", fpus_right_zeros(1), {(0, 0)})

        for build, kind in (
            (fpus_build, "FPUS"), (fptus_build, "F~PUS"), (fus_build, "FUS"),
        ):
            for n in (1, 2):
                table = build(n, limit=self.limits.free_order)
                groups = homology_groups(
                    table.magma, Theory.TWO_TERM, 1,
                    cap=self.limits.boundary_column_cap,
                )
                self.confirm(
                    f"{kind}({n}) two-term homology is Z", all(
                        group.is_integers() for group in groups
                    ), _groups(groups),
                )
        for n in (1, 2):
            groups = homology_groups(
                fus_build(n, limit=self.limits.free_order).magma,
                Theory.ONE_TERM, 1, reduced=True,
                cap=self.limits.boundary_column_cap,
            )
            self.confirm(
                f"FUS({n}) reduced one-term homology vanishes",
                all(group.is_trivial() for group in groups), _groups(groups),
            )

    def check_free_counts(self) -> None:
        terms = min(10, self.limits.fas_count_terms)
        recursion = fas_recursion(terms)
        egf = egf_coefficients(FreeKind.FAS, terms, limit=self.limits.egf_terms)
        self.expect("FAS recursion = EGF", recursion, egf)
        self.expect("FAS first sizes", recursion[1:4], [3, 18, 93])

        expected = list(samples.PRE_UNITAL_SEQUENCE)
        self.expect("pre-unital recursion", pre_unital_recursion(6)[1:], expected)
        egf = egf_coefficients(FreeKind.FPTUS, 6, limit=self.limits.egf_terms)
        self.expect("pre-unital EGF", egf[1:], expected)
        direct = [
            len(fptus_build(n, limit=self.limits.free_order))
            for n in range(1, self.limits.free_order + 1)
        ]
        self.expect("pre-unital direct", direct, expected[:len(direct)])
        self.expect(
            "|FUS(n)| = b_n + 1",
            [len(fus_build(n, limit=self.limits.free_order)) for n in range(1, 4)],
            [b + 1 for b in expected[:3]],
        )
        fpus_egf = egf_coefficients(FreeKind.FPUS, 4, limit=self.limits.egf_terms)
        self.expect(
            "FPUS direct = EGF",
            [len(fpus_build(n, limit=self.limits.free_order)) for n in range(1, 5)],
            fpus_egf[1:],
        )

    def check_enumeration(self) -> None:
        nmax = min(self.depth.max_order, self.limits.enumeration_order)
        frame = count_table(nmax)
        for column in ("AS", "ASp"):
            self.expect(
                f"#{column} for n <= {nmax}",
                frame[column].tolist(), list(PUBLISHED_COUNTS[column][:nmax]),
            )
        self.note(
            "#US computed vs published",
            f"{frame['US'].tolist()} vs {list(PUBLISHED_COUNTS['US'][:nmax])}",
        )
        for n in range(2, nmax + 1):
            self.expect(
                f"#US({n}) = #pre-unital({n - 1})",
                int(frame.loc[n, "US"]), int(frame.loc[n, "pre_unital"]),
            )

    def check_laver(self) -> None:
        for k, rows in samples.PUBLISHED_LAVER.items():
            table = laver_build(k, limit=self.limits.laver_k)
            self.expect(f"A_{k}", [tuple(row) for row in table.rows()], list(rows))
        for k in range(3):
            self.confirm(f"A_{k} is unique", laver_uniqueness_check(k))
        for k in range(1, min(self.depth.laver_structure_k, self.limits.laver_k) + 1):
            structure = laver_right_structure(k, limit=self.limits.laver_k)
            self.confirm(
                f"A_{k} right structure",
                structure.expected_right_fixed in structure.right_fixed,
                "; ".join(structure.annotations()),
            )
        for k in range(1, 5):
            self.confirm(f"A_{k} projects onto A_{k - 1}", laver_projection_check(k))
        for k in (1, 2):
            shelf = laver_build(k).shelf()
            one_term = homology_groups(
                shelf, Theory.ONE_TERM, self.depth.max_degree, reduced=True,
                cap=self.limits.boundary_column_cap,
            )
            self.confirm(
                f"A_{k} reduced one-term homology vanishes",
                all(group.is_trivial() for group in one_term), _groups(one_term),
            )
            two_term = homology_groups(
                shelf, Theory.TWO_TERM, self.depth.max_degree,
                cap=self.limits.boundary_column_cap,
            )
            self.confirm(
                f"A_{k} two-term homology is Z",
                all(group.is_integers() for group in two_term), _groups(two_term),
            )

    def check_appendix_homology(self) -> None:
        for (name, theory), published in samples.PUBLISHED_HOMOLOGY.items():
            groups = homology_groups(
                samples.APPENDIX_SHELVES[name], theory, len(published) - 1,
                cap=self.limits.boundary_column_cap,
            )
            self.expect(f"{theory.value} {name}", _groups(groups), _groups(published))

    def _shelves(self, axioms: Axiom, order: int) -> list[FiniteMagma]:
        found: list[FiniteMagma] = []
        for n in range(1, order + 1):
            report = enumerate_magmas(
                EnumerationQuery(n, axioms, Mode.ISO),
                witnesses=True,
                allow_override=True,
                limit=self.limits.enumeration_order,
                override_limit=self.limits.enumeration_override_order,
                canonical_limit=self.limits.canonical_order,
            )
            found.extend(report.witnesses or [])
        return found

    def _reduced_one_term_survivors(self, magmas: list[FiniteMagma]) -> list[str]:
        """The magmas with some nonzero reduced one-term group up to max_degree."""
        return [
            str(magma) for magma in magmas
            if not all(
                group.is_trivial()
                for group in homology_groups(
                    magma, Theory.ONE_TERM, self.depth.max_degree, reduced=True,
                    cap=self.limits.boundary_column_cap,
                )
            )
        ]

    def check_vanishing_theorems(self) -> None:
        cap = self.limits.boundary_column_cap
        qmax = self.depth.max_degree
        order = min(self.depth.max_order, self.limits.enumeration_order)
        unital = self._shelves(Axiom.UNITAL, order)
        self.expect(
            f"{len(unital)} unital shelves, reduced one-term",
            self._reduced_one_term_survivors(unital), [],
        )

        shelves = self._shelves(Axiom.SHELF, self.depth.shelf_order)
        hypothesised = [
            magma for magma in shelves if theorem_hypotheses(magma).one_term_vanishes
        ]
        self.expect(
            f"{len(hypothesised)} shelves with a bijective column or a left zero, "
            "reduced one-term",
            self._reduced_one_term_survivors(hypothesised), [],
        )

        for label, family in (
            ("shelves with a right-fixed element", shelves),
            ("proto-unital shelves", self._shelves(Axiom.PROTO_UNITAL, order)),
        ):
            candidates = [magma for magma in family if right_fixed_elements(magma)]
            bad = [
                str(magma) for magma in candidates
                if not all(
                    group.is_integers()
                    for group in homology_groups(magma, Theory.TWO_TERM, qmax, cap=cap)
                )
            ]
            self.expect(f"{len(candidates)} {label}, two-term", bad, [])

        homotopy_degree = max(self.depth.max_degree, 3)
        self.confirm(
            "homotopy on the three-constant-columns shelf",
            chain_homotopy_verify(
                samples.THREE_CONSTANT_COLUMNS, 3, 3, homotopy_degree, cap=cap,
            ),
        )
        laver = laver_build(2).shelf()
        self.confirm(
            "homotopy on the transposed A_2",
            chain_homotopy_verify(laver, 2, 3, homotopy_degree, cap=cap),
        )

    def check_chain_complexes(self) -> None:
        shelves = self._shelves(Axiom.SHELF, 3)
        for theory in Theory:
            squares = []
            faces = []
            for magma in shelves:
                for q in range(1, 4):
                    product = boundary_matrix(magma, theory, q) @ boundary_matrix(
                        magma, theory, q + 1,
                    )
                    if not product.is_zero():
                        squares.append((str(magma), q))
                    if not presimplicial_holds(magma, theory, q):
                        faces.append((str(magma), q))
            self.expect(f"{theory.value} boundary squares to zero", squares, [])
            self.expect(f"{theory.value} face identities", faces, [])

    def check_smith_normal_form(self) -> None:
        rng = np.random.default_rng(20240917)
        failures = 0
        for _ in range(self.depth.snf_samples):
            rows, cols = rng.integers(1, self.depth.snf_size + 1, size=2)
            matrix = IntMatrix(rng.integers(-9, 10, size=(rows, cols)))
            if not snf_round_trip(matrix):
                failures += 1
        self.expect(f"{self.depth.snf_samples} random round trips", failures, 0)

    def check_structure(self) -> None:
        racks = [
            magma for n in range(1, 4)
            for magma in search_tables(n, Axiom.RACK | Axiom.ASSOCIATIVE)
        ]
        bad = [
            str(magma) for magma in racks
            if any(magma(x, y) != x for x in magma.elements() for y in magma.elements())
        ]
        self.expect(f"{len(racks)} associative racks are left projections", bad, [])

        order = min(
            self.depth.proto_unital_order, self.limits.enumeration_override_order,
        )
        missing = 0
        total = 0
        for n in range(1, order + 1):
            for magma in search_tables(n, Axiom.PROTO_UNITAL):
                total += 1
                missing += not right_zeros(magma)
        self.expect(f"{total} proto-unital shelves have a right zero", missing, 0)

    def check_torsion_searches(self) -> None:
        cap = self.limits.boundary_column_cap
        order = min(self.depth.max_order, self.limits.enumeration_order)
        associative = self._shelves(Axiom.SHELF | Axiom.ASSOCIATIVE, order)
        scan = torsion_scan(associative, Theory, self.depth.max_degree, cap=cap)
        self.note(
            "torsion in associative shelves",
            f"{len(scan.occurrences())} occurrences in {len(scan.entries)} groups",
        )

        total = min(self.depth.spindle_total, self.limits.scan_size)
        specs = enumerate_block_specs(total, limit=self.limits.scan_size)
        spindles = torsion_witness_scan(
            specs, qmax=self.depth.max_degree, limit=self.limits.scan_size, cap=cap,
        )
        self.expect(
            f"{len(specs)} block spindles with a singleton, two-term",
            [entry.spec.sizes for entry in spindles.two_term_failures()], [],
        )
        witnesses = spindles.torsion_witnesses()
        self.note(
            "one-term H_2 torsion witnesses",
            "; ".join(
                f"{entry.spec.functions}: {entry.one_term_h2}" for entry in witnesses
            ) or "none",
        )


def snf_round_trip(matrix: IntMatrix) -> bool:
    """U A V == D, U and V unimodular, D diagonal with a divisibility chain."""
    result = smith_normal_form(matrix)
    assert result.left_transform is not None
    assert result.right_transform is not None
    if result.left_transform @ matrix @ result.right_transform != result.diagonal:
        return False
    if not (result.left_transform.is_unimodular()
            and result.right_transform.is_unimodular()):
        return False
    d = result.diagonal.entries
    off_diagonal = [
        d[i, j] for i in range(matrix.rows) for j in range(matrix.cols) if i != j
    ]
    if any(off_diagonal):
        return False
    factors = result.invariant_factors
    if any(factors[i + 1] % factors[i] for i in range(len(factors) - 1)):
        return False
    return all(d[i, i] == 0 for i in range(result.rank, min(matrix.shape)))


def verify_paper(
    *, deep: bool = False, limits: Limits | None = None,
) -> VerificationReport:
    """Run the whole suite at the default or the deep depth."""
    depth = Depth.deep() if deep else Depth()
    return ResultVerifier(depth, limits).run()
