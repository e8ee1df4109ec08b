import io
import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from zpspec.cli import main


def run(*argv):
    buf = io.StringIO()
    code = main(list(argv), stdout=buf)
    return code, buf.getvalue()


def schema(name):
    return json.loads(resources.files("zpspec").joinpath(f"schemas/{name}.json").read_text())


CASES = [
    ("embed", ["embed", "-17", "--p", "5", "--depth", "4"]),
    ("vp", ["vp", "0", "--p", "3"]),
    ("vp", ["vp", "--p", "7", "--", "-7/98"]),
    ("lift", ["lift", "--poly", "T^2-17", "--p", "2", "--seed", "1", "--prec", "12"]),
    ("lift", ["lift", "--poly", "T^2-4", "--p", "5", "--seed", "2"]),
    ("roots", ["roots", "--poly", "T^3-T", "--p", "3"]),
    ("roots", ["roots", "--poly", "T^2+2T+1", "--p", "2", "--prec", "6"]),
    ("roots", ["roots", "--poly", "T^2+1", "--p", "7"]),
    ("irred", ["irred", "--poly", "T^3-2", "--p", "5", "--over", "qp"]),
    ("irred", ["irred", "--poly", "3T+3", "--p", "3", "--over", "zp"]),
    ("irred", ["irred", "--poly", "T^4+1", "--p", "3", "--over", "fp"]),
    ("classify", ["classify", "--poly", "3T^2+T+1", "--p", "3"]),
    ("classify", ["classify", "--poly", "3T+3", "--p", "3"]),
    ("classify", ["classify", "--poly", "T^2+1", "--space", "z:2,3,5,7,11,13"]),
]


@pytest.mark.parametrize("kind, argv", CASES)
def test_outputs_validate(kind, argv):
    code, out = run(*argv)
    assert code == 0
    assert out.endswith("\n") and out.count("\n") == 1
    jsonschema.validate(json.loads(out), schema(kind))


def test_schemas_are_versioned():
    for name in ("vp", "embed", "lift", "roots", "irred", "classify", "error"):
        s = schema(name)
        assert s["$id"].endswith(":1")
        jsonschema.Draft202012Validator.check_schema(s)


@pytest.mark.parametrize(
    "argv",
    [
        ["irred", "--poly", "T^^2", "--p", "7"],
        ["lift", "--poly", "T^2-3", "--p", "2", "--seed", "1"],
        ["roots", "--poly", "5", "--p", "5"],
        ["vp", "1/0", "--p", "3"],
        ["classify", "--poly", "T^2+1"],
        ["irred", "--poly", "9T^2+3", "--p", "3"],
    ],
)
def test_domain_errors_exit_1(argv):
    code, out = run(*argv)
    assert code == 1
    jsonschema.validate(json.loads(out), schema("error"))


@pytest.mark.parametrize(
    "argv",
    [["irred", "--poly", "T", "--p", "8"], ["embed", "5"], ["draw", "--anchors", "T"], ["frobnicate"], ["classify", "--poly", "T", "--space", "q"]],
)
def test_usage_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as err:
        main(argv)
    assert err.value.code == 2


def test_undecided_is_an_answer():
    code, out = run("irred", "--poly", "T^4+T+1", "--p", "5")
    assert code == 0 and json.loads(out) == {"verdict": "undecided"}


def test_key_order_is_fixed():
    _, out = run("embed", "200", "--p", "3", "--depth", "5")
    assert list(json.loads(out)) == ["x", "p", "depth", "sequence", "rendered", "digits"]


def test_draw_to_stdout_and_file(tmp_path):
    code, svg = run("draw", "--p", "2", "--anchors", "T^2+1,T^2+2", "--out", "-")
    assert code == 0 and svg.startswith("<?xml")
    target = tmp_path / "f.tex"
    assert main(["draw", "--primes", "2,3", "--format", "tikz", "--out", str(target)]) == 0
    assert r"\begin{tikzpicture}" in target.read_text()


def test_help_shows_defaults(capsys):
    with pytest.raises(SystemExit):
        main(["lift", "--help"])
    assert "default: 50" in capsys.readouterr().out


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "zpspec", "vp", "200", "--p", "5"], capture_output=True, text=True, check=True
    )
    assert json.loads(out.stdout)["valuation"] == 2
