import json
import subprocess
import sys

import pytest

from roughset.cli import main

# expected values computed by hand from block sizes [1,2,2] and [3,2] on five elements
PI = "a1|a2,a3|a4,a5"
SIGMA = "a1,a2,a3|a4,a5"
A = "a1,a2,a3,a4"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_roughness_golden(capsys):
    code, out, _ = run(capsys, "roughness", "--measure", "beta_L", "--partition", PI, "--set", A)
    assert code == 0
    assert out == (
        '{"measure": "beta_L", "partition": "a1|a2,a3|a4,a5", "set": "a1,a2,a3,a4", "value": 0.144, '
        '"beta_P": 0.4, "beta_P_exact": "2/5", "h": 9.0, "h_max": 25.0, "partition_measure": "granulation"}\n'
    )


@pytest.mark.parametrize(
    "measure, partition, expected",
    [
        ("beta_L", SIGMA, 0.208),
        ("beta_E", PI, 0.137816),
        ("beta_E", SIGMA, 0.232734),
        ("beta_Eprime", PI, 0.0551266),
        ("beta_Eprime", SIGMA, 0.125859),
        ("beta_CG", SIGMA, 0.088),
        ("beta_X", PI, 0.167266),
        ("beta_P", SIGMA, 0.4),
    ],
)
def test_roughness_values(capsys, measure, partition, expected):
    code, out, _ = run(capsys, "roughness", "--measure", measure, "--partition", partition, "--set", A)
    assert code == 0
    assert json.loads(out)["value"] == expected


def test_approx(capsys):
    code, out, _ = run(capsys, "approx", "--partition", PI, "--set", A)
    d = json.loads(out)
    assert code == 0
    assert d["lower"] == ["a1", "a2", "a3"] and d["upper"] == ["a1", "a2", "a3", "a4", "a5"]
    assert d["boundary"] == ["a4", "a5"] and d["accuracy"] == 0.6 and d["roughness"] == 0.4
    assert d["accuracy_exact"] == "3/5"


def test_enumerate(capsys):
    assert run(capsys, "enumerate", "--n", "4", "--count-only")[1] == "15\n"
    code, out, _ = run(capsys, "enumerate", "--n", "3")
    assert json.loads(out) == {"n": 3, "count": 5, "partitions": ["1,2,3", "1,2|3", "1,3|2", "1|2,3", "1|2|3"]}


def test_enumerate_capacity(capsys):
    code, _, err = run(capsys, "enumerate", "--n", "13")
    assert code == 1 and "at most 12" in err


def test_verify_pass_and_fail(capsys):
    code, out, _ = run(capsys, "verify", "--kind", "roughness", "--measure", "beta_CG", "--n", "5")
    assert code == 0 and json.loads(out)["pass"] is True
    code, out, _ = run(capsys, "verify", "--kind", "propositions", "--measure", "beta_P", "--n", "3")
    assert code == 1 and json.loads(out)["pass"] is False
    code, out, _ = run(capsys, "verify", "--kind", "partition-measure", "--measure", "co-entropy")
    assert code == 0 and json.loads(out)["n"] == 5
    code, out, _ = run(capsys, "verify", "--kind", "partition-measure", "--measure", "beta_L", "--n", "4")
    assert code == 0 and json.loads(out)["measure"] == "granulation"


def test_verify_pretty(capsys):
    code, out, _ = run(capsys, "verify", "--kind", "weak", "--measure", "beta_L", "--n", "3", "--pretty")
    assert code == 0 and out.startswith("weak check of beta_L at n=3: PASS")


def test_table_commands(capsys, tmp_path):
    path = tmp_path / "t.csv"
    path.write_text("id,v,w\na1,x,p\na2,y,q\na3,y,q\na4,z,p\na5,z,p\n", encoding="utf-8")
    code, out, _ = run(capsys, "table", "partitions", "--table", str(path), "--attrs", "v")
    assert code == 0 and json.loads(out)["partition"] == PI
    code, out, _ = run(capsys, "roughness", "--measure", "beta_L", "--table", str(path), "--attrs", "v,w", "--set", A)
    assert code == 0 and json.loads(out)["value"] == 0.144


def test_domain_errors(capsys, tmp_path):
    assert run(capsys, "roughness", "--measure", "nope", "--partition", PI, "--set", A)[0] == 1
    code, _, err = run(capsys, "approx", "--partition", PI, "--set", "a1,zz")
    assert code == 1 and "zz" in err
    code, _, err = run(capsys, "table", "partitions", "--table", str(tmp_path / "missing.csv"), "--attrs", "v")
    assert code == 1


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--kind", "bogus", "--measure", "beta_L"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "roughset", "enumerate", "--n", "5", "--count-only"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert result.stdout == "52\n" and result.stderr == ""
