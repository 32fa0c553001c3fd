import json
import subprocess
import sys

import pytest

from whiteman6.cli import JobConfig, main, run
from whiteman6.codegen import generator_via_gcd
from whiteman6.polyring import Poly

from conftest import cached_setting


def invoke(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_7_13(capsys):
    code, out, _ = invoke(capsys, "classify", "--n1", "7", "--n2", "13", "--q", "2")
    data = json.loads(out)
    assert code == 0
    assert (data["system"]["g"], data["system"]["x"], data["m"]) == (19, 40, 12)
    assert data["classification"]["omegas"] == [0, 0, 0]
    assert data["classification"]["q_class"] == "D5"


def test_classify_13_7(capsys):
    _, out, _ = invoke(capsys, "classify", "--n1", "13", "--n2", "7", "--q", "2")
    assert json.loads(out)["classification"]["omegas"] == [1, 1, 0]


@pytest.mark.parametrize(
    "argv,needle",
    [
        (["classify", "--n1", "7", "--n2", "15", "--q", "2"], "15 is not prime"),
        (["classify", "--n1", "7", "--n2", "11", "--q", "2"], "gcd(n1-1, n2-1)"),
        (["generate", "--n1", "7", "--n2", "13", "--q", "13"], "gcd(q, n)"),
        (["generate", "--n1", "7", "--n2", "13", "--q", "4"], "not prime"),
        (["classify", "--n1", "7"], "needs --n1, --n2 and --q"),
        (["generate", "--n1", "13", "--n2", "19", "--q", "2", "--theorem", "7", "--indices", "1,0,1,3"], "admissible"),
    ],
)
def test_input_errors_exit_1(capsys, argv, needle):
    code, out, err = invoke(capsys, *argv)
    assert code == 1 and out == ""
    assert needle in err


def test_usage_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["generate", "--indices", "a,b"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 1


def test_generate_reports_oracle_and_closed_form(capsys):
    code, out, _ = invoke(capsys, "generate", "--n1", "13", "--n2", "19", "--q", "2")
    data = json.loads(out)
    assert code == 0
    assert data["code"]["k"] == 109
    assert data["code"]["provenance"] == "oracle+theorem2-III-case-2"
    assert data["closed_form"]["gen"] == data["code"]["gen"]
    assert data["code"]["gen"] == generator_via_gcd(cached_setting(13, 19, 2)).gen.to_comma()


def test_generate_theorem_code(capsys):
    code, out, _ = invoke(
        capsys, "generate", "--n1", "13", "--n2", "31", "--q", "2", "--theorem", "3", "--indices", "1"
    )
    rec = json.loads(out)["code"]
    assert code == 0 and rec["k"] == 13
    assert rec["distance"] == {"kind": "exact", "value": 31, "method": "theorem"}


def test_distance_command(capsys):
    code, out, _ = invoke(
        capsys, "distance", "--n1", "13", "--n2", "31", "--q", "2", "--theorem", "3", "--indices", "1"
    )
    d = json.loads(out)["distance"]
    assert code == 0
    assert d["enumeration"]["kind"] == "exact" and d["enumeration"]["value"] == 31
    assert "support_search" not in d


def test_distance_falls_back_to_search(capsys):
    _, out, _ = invoke(capsys, "distance", "--n1", "13", "--n2", "31", "--q", "2", "--theorem", "4", "--wmax", "3")
    d = json.loads(out)["distance"]
    assert d["enumeration"]["kind"] == "inconclusive"
    assert d["support_search"]["kind"] == "lower-bound" and d["support_search"]["value"] == 4
    assert d["support_search"]["upper_bound"] == 13
    assert d["theorem"]["value"] == 13


def test_check_command(capsys):
    code, out, _ = invoke(capsys, "check", "--n1", "13", "--n2", "19", "--q", "2")
    data = json.loads(out)
    assert code == 0 and data["ok"]
    names = {c["check"] for c in data["checks"]}
    assert {"class_multiplication", "class_sums", "evaluation_table", "factorisation"} <= names


def test_examples_subset_agreeing(capsys):
    code, out, _ = invoke(capsys, "examples", "--examples", "2,7")
    rows = json.loads(out)["examples"]
    assert code == 0 and [r["id"] for r in rows] == [2, 7]


def test_table_format(capsys):
    code, out, _ = invoke(capsys, "check", "--n1", "7", "--n2", "13", "--q", "2", "--format", "table")
    assert code == 0
    assert out.splitlines()[0].split() == ["check", "ok", "detail"]


@pytest.mark.parametrize("command", ["classify", "generate", "check", "distance"])
def test_output_is_byte_identical(command):
    cfg = JobConfig(command, 7, 13, 2)
    assert run(cfg) == run(JobConfig(command, 7, 13, 2))


def _gens(obj):
    if isinstance(obj, dict):
        for k, v in obj.items():
            if k == "gen" and isinstance(v, str):
                yield v
            else:
                yield from _gens(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from _gens(v)


@pytest.mark.parametrize("params", [(7, 13, 2), (13, 19, 2), (19, 31, 3)])
def test_emitted_polynomials_round_trip(params):
    text, _ = run(JobConfig("generate", *params))
    gens = list(_gens(json.loads(text)))
    assert gens
    for g in gens:
        assert Poly.from_comma(g, params[2]).to_comma() == g


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "whiteman6.cli", "classify", "--n1", "13", "--n2", "7", "--q", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["system"]["g"] == 19
