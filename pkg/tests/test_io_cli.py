import json
from pathlib import Path

import pytest

from quasichrom import FgAbelianGroup, chromatic_quasi
from quasichrom.cli import main
from quasichrom.errors import ParseError
from quasichrom.io import parse_graph, parse_instance

DATA = Path(__file__).parent / "data"
EXAMPLE = str(DATA / "worked_example.json")
KLEIN = str(DATA / "klein_all_nonzero.json")
K3 = str(DATA / "k3.txt")
CW = str(DATA / "cw_cyclic.json")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, payload, name="inst.json"):
    p = tmp_path / name
    p.write_text(payload if isinstance(payload, str) else json.dumps(payload))
    return str(p)


def test_parse_instance_errors_name_the_field():
    with pytest.raises(ParseError, match=r"list\[0\]"):
        parse_instance({"group": "Z^2", "list": [[1]]})
    with pytest.raises(ParseError, match="group"):
        parse_instance({"list": [[1]]})
    with pytest.raises(ParseError, match="cw.ell"):
        parse_instance({"cw": {"A": [], "B": [], "ell": -1}})
    with pytest.raises(ParseError, match=r"list\[0\]"):
        parse_instance({"group": "Z", "list": [[True]]})


def test_parse_graph():
    assert parse_graph("3; 1 2; 2 3") == (3, [(1, 2), (2, 3)])
    with pytest.raises(ParseError):
        parse_graph("x\n1 2")
    with pytest.raises(ParseError):
        parse_graph("2\n1 2 3")


def test_chromatic_example(capsys):
    code, out, _ = run(capsys, "chromatic", EXAMPLE)
    assert code == 0
    payload = json.loads(out)
    assert payload["period"] == 8
    assert [c["coeffs"] for c in payload["constituents"]] == [[], [0, 0, 1], [4, -4, 3], [12, -12, 3]]


def test_chromatic_is_thin_wrapper(capsys):
    _, out, _ = run(capsys, "chromatic", EXAMPLE, "--dc")
    direct = chromatic_quasi(FgAbelianGroup(2, (4,)), [(2, 2, 1), (0, 2, 3), (0, 0, 3)])
    from quasichrom import QuasiPolynomial

    assert QuasiPolynomial.from_json(json.loads(out)).same_function(direct)


def test_chromatic_latex(capsys):
    _, out, _ = run(capsys, "chromatic", EXAMPLE, "--latex")
    assert "\\begin{cases}" in json.loads(out)["latex"]


def test_chromatic_empty_list(tmp_path, capsys):
    _, out, _ = run(capsys, "chromatic", write(tmp_path, {"group": "Z^2", "list": []}))
    assert json.loads(out)["constituents"] == [{"class": 1, "coeffs": [0, 0, 1]}]


def test_chromatic_graph(capsys):
    _, out, _ = run(capsys, "chromatic", "--graph", K3)
    assert json.loads(out)["constituents"] == [{"class": 1, "coeffs": [0, 2, -3, 1]}]


@pytest.mark.parametrize(
    "payload,g,expr",
    [
        ({"group": "Z", "list": [[1]]}, "Z", "x"),
        ({"group": "Z", "list": [[0]]}, "Z", "y"),
        ({"group": "Z/2", "list": [[1]]}, "k:4", "y + 1"),
    ],
)
def test_tutte(tmp_path, capsys, payload, g, expr):
    code, out, _ = run(capsys, "tutte", write(tmp_path, payload), "--g", g)
    assert code == 0 and json.loads(out)["expr"] == expr


def test_charpoly_and_real(capsys):
    _, out, _ = run(capsys, "charpoly", EXAMPLE, "--g", "k:2")
    assert json.loads(out)["coeffs"] == [0, 0, 1]
    _, out, _ = run(capsys, "real-charpoly", EXAMPLE)
    assert json.loads(out) == {"coeffs": [1, -2, 1], "expr": "t^2 - 2t + 1"}


def test_period(capsys):
    _, out, _ = run(capsys, "period", EXAMPLE)
    assert json.loads(out) == {"lcm_period": 8, "minimal_period": 8}


def test_verify_example(capsys):
    code, out, _ = run(capsys, "verify", EXAMPLE, "--qmax", "24")
    assert code == 0
    assert "q=8 oracle=108 symbolic=108 PASS" in out
    assert out.rstrip().endswith("verify PASS")


def test_verify_elementary_two_group_is_zero(capsys):
    code, out, _ = run(capsys, "verify", KLEIN, "--qmax", "16")
    assert code == 0
    rows = [line for line in out.splitlines() if line.startswith("q=")]
    assert len(rows) == 16 and all("oracle=0 symbolic=0" in r for r in rows)


def test_verify_corrupted_expectation(tmp_path, capsys):
    _, out, _ = run(capsys, "chromatic", EXAMPLE)
    payload = json.loads(out)
    payload["constituents"][2]["coeffs"][0] += 1
    code, out, _ = run(capsys, "verify", EXAMPLE, "--qmax", "8", "--expect", write(tmp_path, payload))
    assert code == 1
    assert "expect q=4 oracle=36 symbolic=37 FAIL" in out


def test_verify_unreadable_expectation(tmp_path, capsys):
    code, _, err = run(capsys, "verify", EXAMPLE, "--expect", write(tmp_path, "{not json"))
    assert code == 2 and "error:" in err


def test_convert_to_cw_with_check(capsys):
    code, out, err = run(capsys, "convert", EXAMPLE, "--to", "cw", "--check", "--qmax", "8")
    assert code == 0
    assert json.loads(out) == {"cw": {"A": [[2, 2, 1], [0, 2, 3], [0, 0, 3]], "B": [[0, 0, 4]], "ell": 3}}
    assert "q=8 bm=108 cw=108 PASS" in err


def test_convert_to_bm(capsys):
    code, out, _ = run(capsys, "convert", CW, "--to", "bm")
    assert code == 0 and json.loads(out) == {"group": "Z/4", "list": [[1]]}


def test_convert_zero_b(tmp_path, capsys):
    src = write(tmp_path, {"cw": {"A": [[1, 0], [1, -1]], "B": [], "ell": 2}})
    _, out, _ = run(capsys, "convert", src, "--to", "bm")
    assert json.loads(out) == {"group": "Z^2", "list": [[1, 0], [1, -1]]}


def test_convert_round_trip(tmp_path, capsys):
    cw_file = str(tmp_path / "cw.json")
    assert main(["convert", EXAMPLE, "--to", "cw", "-o", cw_file]) == 0
    bm_file = str(tmp_path / "bm.json")
    assert main(["convert", cw_file, "--to", "bm", "-o", bm_file]) == 0
    back = json.loads(Path(bm_file).read_text())
    assert back["group"] == "Z^2 + Z/4"
    capsys.readouterr()
    _, a, _ = run(capsys, "chromatic", EXAMPLE)
    _, b, _ = run(capsys, "chromatic", bm_file)
    assert a == b


def test_convert_to_bm_needs_cw(capsys):
    code, _, err = run(capsys, "convert", EXAMPLE, "--to", "bm")
    assert code == 2 and "cw" in err


@pytest.mark.parametrize("cmd", ["chromatic", "tutte", "charpoly", "period", "real-charpoly"])
def test_output_is_byte_stable(capsys, cmd):
    first = run(capsys, cmd, EXAMPLE)
    second = run(capsys, cmd, EXAMPLE)
    assert first == second


@pytest.mark.parametrize(
    "payload",
    [
        "[]",
        "{oops",
        {"group": "Z^2 + Z/4", "list": [[1, 2]]},
        {"group": "Z/4 + Z/6", "list": []},
        {"group": 7},
    ],
)
def test_input_errors_exit_two(tmp_path, capsys, payload):
    code, out, err = run(capsys, "chromatic", write(tmp_path, payload))
    assert code == 2 and out == "" and err.startswith("error:")


def test_missing_file_exits_two(capsys):
    code, _, err = run(capsys, "chromatic", "/nonexistent/instance.json")
    assert code == 2


def test_missing_input_exits_two(capsys):
    assert run(capsys, "chromatic")[0] == 2


def test_bad_g_exits_two(capsys):
    assert run(capsys, "tutte", EXAMPLE, "--g", "k:zero")[0] == 2


def test_subset_cap_exits_three(capsys):
    code, _, err = run(capsys, "chromatic", EXAMPLE, "--subset-cap", "2")
    assert code == 3 and "error:" in err


def test_enum_cap_exits_three(capsys):
    assert run(capsys, "verify", EXAMPLE, "--enum-cap", "100")[0] == 3
