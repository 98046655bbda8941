"""Reference structures."""
from shelflab.magma import check_axioms
from shelflab.samples import APPENDIX_SHELVES
from shelflab.samples import FAS2_TABLE
from shelflab.samples import FAS2_WORDS
from shelflab.samples import PUBLISHED_HOMOLOGY
from shelflab.samples import row_constant


def test_row_constant():
    magma = row_constant((1, 1, 0))
    assert magma.table == ((1, 1, 1), (1, 1, 1), (0, 0, 0))


def test_appendix_shelves_are_shelves():
    for name, magma in APPENDIX_SHELVES.items():
        assert check_axioms(magma).shelf, name


def test_published_homology_names_known_shelves():
    assert {name for name, _ in PUBLISHED_HOMOLOGY} == set(APPENDIX_SHELVES)


def test_fas2_table_shape():
    assert len(FAS2_WORDS) == len(set(FAS2_WORDS)) == 18
    assert all(len(row) == 18 for row in FAS2_TABLE)
