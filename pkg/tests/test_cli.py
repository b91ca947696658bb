import io
import json
import subprocess
import sys

import pytest

from jacksym.cli import EXIT_ERROR, CliError, Config, run
from jacksym.jack import clear_caches
from jacksym.operator import unseed_tables


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


def call_json(*argv):
    code, text = call(*argv)
    return code, json.loads(text)


def terms(obj):
    return {t["partition"]: t["coeff"] for t in obj["expansion"]["terms"]}


def test_expand_examples():
    code, obj = call_json("expand", "--lambda", "1,1", "--norm", "Q", "--basis", "q")
    assert code == 0
    assert terms(obj) == {"1,1": {"num": ["1"], "den": ["1"]},
                          "2": {"num": ["-2"], "den": ["1", "1"]}}
    assert [t["partition"] for t in obj["expansion"]["terms"]] == ["2", "1,1"]
    _, obj = call_json("expand", "--lambda", "2", "--norm", "J", "--basis", "p")
    assert terms(obj) == {"2": {"num": ["0", "1"], "den": ["1"]}, "1,1": {"num": ["1"], "den": ["1"]}}


@pytest.mark.parametrize("method", ["iteration", "determinant", "filtration", "gram_schmidt"])
def test_expand_is_deterministic_across_methods(method):
    base = call("expand", "--lambda", "3,2,1", "--norm", "Q", "--basis", "q")[1]
    again = call("expand", "--lambda", "3,2,1", "--norm", "Q", "--basis", "q")[1]
    other = call("expand", "--lambda", "3,2,1", "--norm", "Q", "--basis", "q", "--method", method)[1]
    assert base == again
    assert json.loads(base)["expansion"] == json.loads(other)["expansion"]


def test_alpha_evaluation_and_pole():
    code, obj = call_json("expand", "--lambda", "1,1", "--norm", "Q", "--basis", "q",
                          "--alpha", "1/2")
    assert code == 0 and terms(obj)["2"] == "-4/3" and obj["alpha"] == "1/2"
    code, obj = call_json("--alpha", "-1", "expand", "--lambda", "1,1", "--norm", "Q",
                          "--basis", "q")
    assert code == EXIT_ERROR and obj["error"]["type"] == "pole"


@pytest.mark.parametrize("argv,kind", [
    (["expand", "--lambda", "1,x"], "malformed_partition"),
    (["expand", "--lambda", "1,2"], "malformed_partition"),
    (["expand", "--lambda", ""], "unsupported"),
    (["expand", "--lambda", "5,4", "--method", "filtration"], "unsupported"),
    (["expand"], "usage"),
    (["frobnicate"], "usage"),
    (["--alpha", "x/y", "expand", "--lambda", "1"], "invalid_argument"),
    (["--max-weight", "-1", "selfcheck"], "invalid_argument"),
    (["table", "--weight", "2", "--operator", "D"], "unsupported"),
    (["selfcheck", "--suites", "nope"], "invalid_argument"),
    (["selfcheck", "--inject-fault", "1,1"], "invalid_argument"),
    (["virasoro-check", "--r", "0", "--s", "1"], "invalid_argument"),
])
def test_errors_are_json(argv, kind):
    code, obj = call_json(*argv)
    assert code == EXIT_ERROR
    assert obj["error"]["type"] == kind and obj["error"]["message"]


def test_inner_pieri_lr():
    _, obj = call_json("inner", "--lambda", "1", "--mu", "1")
    assert obj["value"] == {"num": ["0", "1"], "den": ["1"]}
    _, obj = call_json("pieri", "--n", "2", "--mu", "2,1", "--lambda", "3,2")
    assert obj["strip"] is True and obj["value"]["num"] != ["0"]
    _, obj = call_json("pieri", "--n", "2", "--mu", "1", "--lambda", "1,1,1")
    assert obj["strip"] is False and obj["value"] == {"num": ["0"], "den": ["1"]}
    _, direct = call_json("lr", "--mu", "2,1", "--nu", "1", "--lambda", "2,1,1")
    _, filt = call_json("lr", "--mu", "2,1", "--nu", "1", "--lambda", "2,1,1",
                        "--route", "filtration", "--witnesses")
    assert direct["value"] == filt["value"] and direct["nonzero"] is True
    assert filt["normalization"] == "J" and "conversion" in filt and filt["witnesses"]


def test_virasoro_check():
    _, obj = call_json("virasoro-check", "--r", "1", "--s", "1")
    assert obj["beta_star"] == {"num": ["-2", "2"], "den": ["0", "1"]}
    assert obj["is_singular"] is True
    _, obj = call_json("virasoro-check", "--r", "2", "--s", "3", "--beta", "3/1")
    assert obj["is_singular"] is True and obj["annihilated_at_beta"] is False
    _, obj = call_json("virasoro-check", "--r", "1", "--s", "1",
                       "--beta", '{"num":["-2","2"],"den":["0","1"]}')
    assert obj["annihilated_at_beta"] is True


def test_table():
    _, obj = call_json("table", "--weight", "2")
    assert obj["order"] == ["2", "1,1"]
    assert obj["matrix"] == [[{"num": ["-2", "2"], "den": ["1"]}, {"num": ["0"], "den": ["1"]}],
                             [{"num": ["2"], "den": ["1"]}, {"num": ["-3", "1"], "den": ["1"]}]]
    _, obj = call_json("table", "--weight", "0")
    assert obj["order"] == [""]


def test_selfcheck():
    code, obj = call_json("--max-weight", "0", "selfcheck")
    assert code == 0 and obj["passed"]
    code, obj = call_json("--max-weight", "3", "selfcheck")
    assert code == 0 and obj["passed"] and all(s["passed"] for s in obj["suites"])


def test_selfcheck_fault_injection():
    code, obj = call_json("--max-weight", "3", "selfcheck", "--suites", "four_way",
                          "--inject-fault", "1,1:2")
    assert code == 1 and not obj["passed"]
    (suite,) = obj["suites"]
    assert suite["suite"] == "four_way" and suite["failures"]
    w = suite["failures"][0]
    assert {"la", "mu", "methods", "values"} <= set(w)
    # the fault does not outlive the command
    assert call_json("--max-weight", "3", "selfcheck", "--suites", "four_way")[0] == 0


def test_bench_schema(tmp_path):
    code, obj = call_json("bench", "--weights", "2..4", "--methods", "iteration",
                          "--shape", "3,1", "--cache-dir", str(tmp_path))
    assert code == 0 and obj["schema"] == 1
    assert [r["weight"] for r in obj["rows"]] == [2, 3, 4]
    keys = {"weight", "method", "shapes", "cold_seconds", "warm_seconds", "max_shape_seconds",
            "table_hits", "table_misses"}
    assert all(set(r) == keys for r in obj["rows"])
    assert obj["regression"]["within_threshold"] is True
    assert set(obj["disk_cache"]) == {"hits", "misses", "corrupt", "writes"}
    assert call_json("bench", "--weights", "2", "--methods", "nope")[0] == EXIT_ERROR


def test_text_output():
    code, text = call("--output", "text", "expand", "--lambda", "1,1", "--norm", "Q", "--basis", "q")
    assert code == 0 and "-2/(a + 1)" in text
    code, text = call("virasoro-check", "--r", "1", "--s", "1", "--output", "text")
    assert "is_singular = true" in text


def test_cache_dir_is_transparent(tmp_path):
    argv = ["expand", "--lambda", "2,2,1", "--norm", "P", "--basis", "m"]
    plain = call(*argv)[1]
    cold = call(*argv, "--cache-dir", str(tmp_path))[1]
    warm = call(*argv, "--cache-dir", str(tmp_path))[1]
    unseed_tables()
    clear_caches()
    assert plain == cold == warm
    assert (tmp_path / "expansions" / "P_m_2-2-1.json").exists()


def test_config_validation():
    with pytest.raises(CliError):
        Config(max_weight=-1)
    with pytest.raises(CliError):
        Config(output="xml")


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "jacksym.cli", "expand", "--lambda", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["expansion"]["basis"] == "m"
