"""The shelflab command, end to end."""
import json

import pytest

from shelflab import EXIT_FAILURE
from shelflab import EXIT_SUCCESS
from shelflab import EXIT_USAGE
from shelflab import ShelfLab
from shelflab.intmatrix import IntMatrix
from shelflab.samples import LEFT_PROJECTION
from shelflab.samples import MIN_CHAIN

from conftest import NOT_A_SHELF


pytestmark = pytest.mark.usefixtures("isolated")


def run_json(capsys, *argv):
    assert ShelfLab().run([*argv, "--format", "json", "-q"]) == EXIT_SUCCESS
    return json.loads(capsys.readouterr().out)


def test_homology(capsys, write_cay):
    path = write_cay(LEFT_PROJECTION)
    document = run_json(
        capsys, "homology", str(path), "--theory", "two-term", "--q", "2",
    )
    assert document["schema"] == 1
    assert document["command"] == "homology"
    assert document["free_rank"] == 64
    assert document["torsion"] == []
    assert document["group"] == "Z^64"


def test_reduced_homology(capsys, write_cay):
    path = write_cay(MIN_CHAIN)
    document = run_json(
        capsys, "homology", str(path), "--theory", "one-term", "--q", "0", "--reduced",
    )
    assert document["group"] == "0"


def test_export_matrix(capsys, write_cay, tmp_path):
    path = write_cay(MIN_CHAIN)
    exported = tmp_path / "boundary.txt"
    run_json(
        capsys, "homology", str(path), "--theory", "one-term", "--q", "0",
        "--export-matrix", str(exported),
    )
    matrix = IntMatrix.from_triplets(exported.read_text(encoding="UTF-8"))
    assert matrix.shape == (4, 16)


def test_axioms(capsys, write_cay):
    document = run_json(capsys, "axioms", str(write_cay(MIN_CHAIN)), "--canonical")
    assert document["order"] == 4
    assert document["unital"]
    assert document["unit"] == 3
    assert "pre_unital" in document["axioms"].split(",")
    assert len(document["tables"]) == 1


def test_enumerate(capsys, tmp_path):
    witnesses = tmp_path / "found.cay"
    document = run_json(
        capsys, "enumerate", "--n", "2", "--axioms", "shelf,associative",
        "--witnesses", str(witnesses),
    )
    assert document["count"] == 4
    assert document["labeled_from_orbits"] == document["count"] + 2
    assert witnesses.read_text(encoding="UTF-8").count("\n2\n") == 3


def test_enumerate_order_one(capsys):
    document = run_json(
        capsys, "enumerate", "--n", "1", "--axioms", "shelf,associative",
    )
    assert document["count"] == 1


def test_free(capsys, tmp_path):
    legend = tmp_path / "legend.tsv"
    document = run_json(
        capsys, "free", "--kind", "fptus", "--n", "2", "--legend", str(legend),
    )
    assert document["size"] == 4
    assert document["tables"][0]["table"] == [
        [0, 2, 2, 3], [3, 1, 2, 3], [3, 2, 2, 3], [3, 2, 2, 3],
    ]
    assert legend.read_text(encoding="UTF-8").splitlines()[3] == "3\t1.0\tba"


def test_laver_text(capsys):
    assert ShelfLab().run(["laver", "--k", "3", "--one-indexed", "-q"]) == EXIT_SUCCESS
    out = capsys.readouterr().out
    assert out.startswith("# A_3\n8\n2 4 6 8 2 4 6 8\n")
    assert out.endswith("1 2 3 4 5 6 7 8\n")


def test_laver_annotated(capsys):
    document = run_json(capsys, "laver", "--k", "2", "--transpose", "--annotate")
    comments = document["tables"][0]["comments"]
    assert comments[0] == "A_2, transposed"
    assert any(comment.startswith("right-fixed") for comment in comments)


def test_spindle_spec(capsys, tmp_path):
    spec = tmp_path / "spec.txt"
    spec.write_text("1: 0\n2: 1 0\n", encoding="UTF-8")
    document = run_json(capsys, "spindle", "--spec", str(spec))
    assert document["tables"][0]["table"] == [[0, 2, 1], [0, 1, 2], [0, 1, 2]]


def test_spindle_scan(capsys):
    document = run_json(capsys, "spindle", "--scan", "3", "--qmax", "1")
    assert document["two_term_failures"] == 0
    assert len(document["scan"]) == document["specs"]


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    argv = ["laver", "--k", "1", "--format", "json", "-q", "-o", str(target)]
    assert ShelfLab().run(argv) == EXIT_SUCCESS
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text(encoding="UTF-8"))["tables"][0]["order"] == 2


def test_usage_errors():
    assert ShelfLab().run(["laver", "--bogus"]) == EXIT_USAGE
    assert ShelfLab().run([]) == EXIT_USAGE


def test_bad_input_file(tmp_path):
    path = tmp_path / "bad.cay"
    path.write_text("2\n0 1\n", encoding="UTF-8")
    argv = ["homology", str(path), "--theory", "one-term", "--q", "1", "-q"]
    assert ShelfLab().run(argv) == EXIT_USAGE
    missing = ["axioms", str(tmp_path / "missing.cay"), "-q"]
    assert ShelfLab().run(missing) == EXIT_USAGE


def test_computation_errors(write_cay):
    path = write_cay(NOT_A_SHELF)
    argv = ["homology", str(path), "--theory", "one-term", "--q", "1", "-q"]
    assert ShelfLab().run(argv) == EXIT_FAILURE
    assert ShelfLab().run(["enumerate", "--n", "5", "--axioms", "shelf", "-q"]) == (
        EXIT_FAILURE
    )


def test_settings_limit_the_run(isolated):
    (isolated / "shelflab.ini").write_text("[Limits]\nlaver_k = 2\n", encoding="UTF-8")
    assert ShelfLab().run(["laver", "--k", "3", "-q"]) == EXIT_FAILURE
    assert ShelfLab().run(["laver", "--k", "2", "-q"]) == EXIT_SUCCESS


def test_bad_settings(isolated):
    (isolated / "shelflab.ini").write_text("[Limits]\nlaver_k = x\n", encoding="UTF-8")
    assert ShelfLab().run(["laver", "--k", "1", "-q"]) == EXIT_USAGE


def test_write_settings(isolated, capsys):
    argv = ["laver", "--k", "1", "-q", "--write-settings"]
    assert ShelfLab().run(argv) == EXIT_SUCCESS
    capsys.readouterr()
    text = (isolated / "shelflab.ini").read_text(encoding="UTF-8")
    assert "[Limits]" in text
    assert "laver_k = 10" in text


def test_results_are_cached(isolated, capsys, monkeypatch, write_cay):
    cache = isolated / "cache"
    monkeypatch.setenv("SHELFLAB_CACHE", str(cache))
    argv = ["homology", str(write_cay(MIN_CHAIN)), "--theory", "two-term", "--q", "1"]
    first = run_json(capsys, *argv)
    assert len(list(cache.iterdir())) == 1
    assert run_json(capsys, *argv) == first
    assert len(list(cache.iterdir())) == 1
    run_json(capsys, *argv, "--no-cache")
    assert len(list(cache.iterdir())) == 1


def test_side_files_bypass_the_cache(isolated, capsys, monkeypatch):
    cache = isolated / "cache"
    monkeypatch.setenv("SHELFLAB_CACHE", str(cache))
    run_json(capsys, "free", "--kind", "fus", "--n", "1", "--legend", "legend.tsv")
    assert not cache.exists()
    assert (isolated / "legend.tsv").exists()


def test_undecodable_input_is_a_usage_error(tmp_path):
    table = tmp_path / "bad.cay"
    table.write_bytes(b"2\n0 1\n\xff 1\n")
    assert ShelfLab().run(["axioms", str(table), "-q"]) == EXIT_USAGE
    spec = tmp_path / "bad.txt"
    spec.write_bytes(b"\xff: 0\n")
    assert ShelfLab().run(["spindle", "--spec", str(spec), "-q"]) == EXIT_USAGE


def test_oversized_scan_fails_before_enumerating():
    assert ShelfLab().run(["spindle", "--scan", "9", "-q"]) == EXIT_FAILURE
