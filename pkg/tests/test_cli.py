"""End-to-end checks of the command-line interface."""

import json
import subprocess

import pytest

from permpat.cli import main


def lines(capsys):
    out = capsys.readouterr().out
    return [line for line in out.splitlines() if line]


def test_classify_json_record(capsys):
    assert main(["classify", "31524"]) == 0
    (line,) = lines(capsys)
    assert json.loads(line) == {
        "perm": "31524",
        "smooth": False,
        "factorial": False,
        "gorenstein": False,
        "dbi": False,
        "hexagon_123_avoiding": False,
        "boolean": False,
        "balanced": True,
        "forest_like": False,
        "baxter": False,
        "simsun": True,
        "dumont1": False,
        "dumont2": False,
        "freely_braided": True,
        "descents": [1, 3],
        "cycle_type": [5],
    }


def test_classify_pretty_and_multiple(capsys):
    assert main(["classify", "--pretty", "21", "1,2"]) == 0
    first, second = lines(capsys)
    assert first.startswith("perm=21") and "smooth=True" in first
    assert second.startswith("perm=12")
    assert "descents=-" in second  # empty lists render as a dash


def test_classify_rejects_bad_perm(capsys):
    assert main(["classify", "1o2"]) == 2
    assert "bad permutation" in capsys.readouterr().err


def test_count_property_baxter(capsys):
    assert main(["count", "--property", "baxter", "--n", "6"]) == 0
    records = [json.loads(line) for line in lines(capsys)]
    assert [r["rank"] for r in records] == [1, 2, 3, 4, 5, 6]
    assert [r["count"] for r in records] == [1, 2, 6, 22, 92, 422]


def test_count_pattern_avoiders(capsys):
    assert main(["count", "--pattern", "cl:12", "--n", "3"]) == 0
    assert [json.loads(line)["count"] for line in lines(capsys)] == [1, 1, 1]


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--property", "baxter", "--pattern", "cl:12"],
        ["count"],
        ["count", "--pattern", "cl:12", "--n", "10"],
        ["count", "--property", "factorial", "--method", "frobenius"],
        ["count", "--property", "smooth", "--method", "anything"],
        ["count", "--pattern", "cl:012"],
        ["avoiders", "--pattern", "cl:12", "--n", "0"],
        ["occurrences", "--pattern", "zz:12", "123"],
        ["translate", "--pattern", "cl:123"],
        ["translate", "--pattern", "brt:123;t={(1,3)}"],
    ],
)
def test_usage_errors_exit_2(argv, capsys):
    assert main(argv) == 2
    assert "error:" in capsys.readouterr().err


def test_avoiders_lists_permutations(capsys):
    assert main(["avoiders", "--pattern", "cl:132", "--n", "3"]) == 0
    perms = [json.loads(line)["perm"] for line in lines(capsys)]
    assert perms == ["123", "213", "231", "312", "321"]
    assert main(["avoiders", "--pattern", "cl:132", "--n", "3", "--pretty"]) == 0
    assert lines(capsys) == perms


def test_occurrences_prints_position_tuples(capsys):
    assert main(["occurrences", "--pattern", "cl:123", "32415"]) == 0
    assert lines(capsys) == ["(1,3,5)", "(2,3,5)"]
    assert main(["occurrences", "--pattern", "cl:132", "32415"]) == 0
    assert lines(capsys) == []


def test_translate_prints_mesh_notation(capsys):
    assert main(["translate", "--pattern", "bar:123;bars={2}"]) == 0
    assert lines(capsys) == ["m:12;r={(1,1)}"]
    assert main(["translate", "--pattern", "bar:634125;bars={3,5}"]) == 0
    assert len(lines(capsys)) == 2


def test_verify_emits_suite_record(capsys):
    assert main(["verify", "--suite", "figure1", "--max-n", "5"]) == 0
    (line,) = lines(capsys)
    record = json.loads(line)
    assert record["suite"] == "figure1"
    assert record["passed"] is True
    assert record["checked"] > 0
    assert record["failures"] == []
    assert isinstance(record["notes"], list)


def test_verify_warns_below_sound_rank(capsys):
    assert main(["verify", "--suite", "figure1", "--max-n", "4"]) == 0
    captured = capsys.readouterr()
    assert "warning" in captured.err
    assert json.loads(captured.out)["passed"] is True


def test_verify_fails_when_selection_is_ambiguous():
    # Below rank 6 the marked-mesh candidates are indistinguishable, so in a
    # fresh process (no deeper sweep memoized) the second-obstruction
    # selection cannot succeed and the suite must fail.
    proc = subprocess.run(
        ["permpat", "verify", "--suite", "dbi-methods", "--max-n", "5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 1
    assert "warning" in proc.stderr
    assert json.loads(proc.stdout)["passed"] is False


def test_verify_output_is_independent_of_jobs(capsys):
    assert main(["verify", "--suite", "figure1", "--max-n", "6", "--jobs", "1"]) == 0
    serial = capsys.readouterr().out
    assert main(["verify", "--suite", "figure1", "--max-n", "6", "--jobs", "2"]) == 0
    parallel = capsys.readouterr().out
    assert serial == parallel


def test_classify_figures_written(tmp_path, capsys):
    assert main(["classify", "2143", "--figures", str(tmp_path)]) == 0
    record = json.loads(lines(capsys)[0])
    assert record["figures"]
    for path in record["figures"]:
        assert path.endswith(".png")
        assert (tmp_path / path.split("/")[-1]).exists()


def test_count_figures_written(tmp_path, capsys):
    assert main(
        ["count", "--property", "boolean", "--n", "4", "--figures", str(tmp_path)]
    ) == 0
    last = json.loads(lines(capsys)[-1])
    assert list(last) == ["figures"]
    assert (tmp_path / last["figures"][0].split("/")[-1]).exists()


def test_console_script_runs():
    proc = subprocess.run(
        ["permpat", "classify", "21"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["perm"] == "21"
