import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from nakayama_ct.cli import main

GOLDEN = Path(__file__).parent / "golden"

# (file name, argv); regenerate with UPDATE_GOLDEN=1
GOLDEN_CASES = [
    ("quiver_9_3.dot", "quiver --m 9 --l 3 --highlight-n 2 --format dot"),
    ("quiver_9_3.json", "quiver --m 9 --l 3 --highlight-n 2 --format json"),
    ("ct_9_3.tsv", "ct build --m 9 --l 3 --n 2 --format tsv"),
    ("quiver_9_4.dot", "quiver --m 9 --l 4 --highlight-n 4 --format dot"),
    ("quiver_9_4.json", "quiver --m 9 --l 4 --highlight-n 4 --format json"),
    ("ct_9_4.tsv", "ct build --m 9 --l 4 --n 4 --format tsv"),
    ("quiver_3_2.dot", "quiver --m 3 --l 2 --format dot"),
    ("quiver_3_2.json", "quiver --m 3 --l 2 --format json"),
    ("ct_3_2.tsv", "ct build --m 3 --l 2 --n 2 --format tsv"),
    ("table_9.tsv", "table --max-m 9 --max-n 4"),
]


def run(capsys, argv: str) -> tuple[int, str, str]:
    code = main(argv.split())
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name,argv", GOLDEN_CASES, ids=[c[0] for c in GOLDEN_CASES])
def test_golden(capsys, name, argv):
    code, out, _ = run(capsys, argv)
    assert code == 0
    path = GOLDEN / name
    if os.environ.get("UPDATE_GOLDEN"):
        path.write_bytes(out.encode())
    assert out.encode() == path.read_bytes()


def test_classify(capsys):
    assert run(capsys, "classify --m 9 --l 3 --n 2") == (0, "admits (n even, k=1)\n", "")
    assert run(capsys, "classify --m 7 --l 2 --n 3")[1] == "admits (l=2, k=2)\n"
    assert run(capsys, "classify --m 5 --l 3 --n 2")[:2] == (1, "denies\n")
    assert run(capsys, "classify --m 9 --l 4 --d-rep-finite")[:2] == (0, "d-representation-finite, d=4\n")
    assert run(capsys, "classify --m 9 --l 3 --d-rep-finite")[:2] == (1, "no\n")


@pytest.mark.parametrize(
    "argv",
    [
        "classify --m 5 --l 5 --n 2",
        "classify --m 9 --l 3",
        "classify --m 9 --l 3 --n 1",
        "ct build --kupisch 1,2,4 --n 2",
        "ct build --kupisch 1,2,3,2,3 --n 2",
        "quiver --m 3",
        "pd --m 9 --l 3 --i 1 --j 4",
        "pd --m 9 --l 3 --i 1",
        "bogus",
        "classify --m x --l 3 --n 2",
    ],
)
def test_invalid_input_exit_2(capsys, argv):
    code, out, err = run(capsys, argv)
    assert code == 2
    assert err


def test_ct_build_json(capsys):
    code, out, _ = run(capsys, "ct build --m 9 --l 3 --n 2 --format json")
    data = json.loads(out)
    assert code == 0 and len(data["modules"]) == 15


def test_ct_build_kupisch_homogeneous(capsys):
    a = run(capsys, "ct build --kupisch 1,2,3,3,3,3,3,3,3 --n 2")
    b = run(capsys, "ct build --m 9 --l 3 --n 2")
    assert a == b


def test_ct_verify(capsys):
    code, out, _ = run(capsys, "ct verify --m 5 --l 3 --n 2")
    assert code == 1
    assert "M(3,2)" in out and "a2\tfail" in out
    code, out, _ = run(capsys, "ct verify --m 9 --l 3 --n 2 --format json")
    data = json.loads(out)
    assert code == 0 and data["passed"] and data["oracle_is_nct"]


def test_ct_search(capsys):
    assert run(capsys, "ct search --kupisch 1,2,3,2,3 --n 2")[:2] == (1, "none found\n")
    code, out, _ = run(capsys, "ct search --m 4 --l 3 --n 2 --format json")
    assert code == 0
    assert json.loads(out)["results"] == [[[1, 1], [4, 1], [1, 2], [3, 2], [1, 3], [2, 3]]]
    code, out, _ = run(capsys, "ct search --m 4 --l 3 --n 2")
    assert out.startswith("# result 1\ni\tj\n")


def test_ct_search_budget_exit_3(capsys):
    code, _, err = run(capsys, "ct search --m 9 --l 3 --n 2 --budget 2")
    assert code == 3 and "budget" in err


def test_table_rows(capsys):
    code, out, _ = run(capsys, "table --max-m 9 --max-n 4 --verify-up-to-m 5")
    assert code == 0
    rows = [line.split("\t") for line in out.splitlines()]
    assert rows[0] == ["m", "l", "n", "admits", "verified", "ct_size"]
    by_key = {tuple(r[:3]): r[3:] for r in rows[1:]}
    assert by_key[("9", "3", "2")] == ["true", "skipped", "15"]
    assert by_key[("9", "4", "4")] == ["true", "skipped", "12"]
    assert by_key[("5", "3", "2")] == ["false", "false-confirmed", "0"]
    assert by_key[("4", "3", "2")] == ["true", "true-confirmed", "6"]


def test_quiver_counts(capsys):
    _, out, _ = run(capsys, "quiver --m 9 --l 4 --highlight-n 4 --format dot")
    assert sum(1 for line in out.splitlines() if "[label=" in line) == 30
    assert out.count("highlight=true") == 12
    _, out, _ = run(capsys, "quiver --m 9 --l 3 --format json")
    assert len(json.loads(out)["vertices"]) == 24


def test_gldim_and_pd(capsys):
    assert run(capsys, "gldim --m 9 --l 4")[:2] == (0, "4\n")
    assert run(capsys, "gldim --kupisch 1,2,3,2,3")[:2] == (0, "2\n")
    assert run(capsys, "pd --m 9 --l 3 --i 5 --j 2")[:2] == (0, "3\n")
    code, out, _ = run(capsys, "pd --m 4 --l 2")
    assert out.splitlines()[:3] == ["i\tj\tpd", "1\t1\t0", "2\t1\t1"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "nakayama_ct", "classify", "--m", "9", "--l", "3", "--n", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "admits (n even, k=1)\n"
