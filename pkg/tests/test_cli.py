import csv
import io
import json
import re
import subprocess
import sys
from fractions import Fraction

import pytest

from resistnet.cli import rational, run
from resistnet.formats import network_to_dict
from resistnet.graph import TwoLayerNetwork


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def design_args(cp="5", k2="9", n2="5"):
    return ["design", "--n1", "20", "--n2", n2, "--k1", "5", "--k2", k2, "--cp", cp, "--cnp", "1"]


def write_net(tmp_path, net, name="net.json"):
    path = tmp_path / name
    path.write_text(json.dumps(network_to_dict(net)))
    return str(path)


def test_design_json():
    code, text = call(*design_args())
    assert code == 0
    data = json.loads(text)
    assert (data["strategy"], data["p"], data["m"]) == ("SN2M1", 4, 63)
    assert data["cost"] == {"num": 83, "den": 1}
    assert data["verified"] and data["optimal_claimed"] and data["selection"] == "thresholds"


def test_design_verify_round_trip(tmp_path):
    for cp in ("3", "5", "7", "21/4"):
        code, text = call(*design_args(cp))
        path = tmp_path / "d.json"
        path.write_text(json.dumps(json.loads(text)["network"]))
        for method in ("mincut",):
            code, out = call("verify", "--network", str(path), "--k1", "5", "--k2", "9", "--method", method)
            assert code == 0 and json.loads(out)["resistant"] is True


def test_verify_small_brute(tmp_path):
    code, text = call("design", "--n1", "6", "--n2", "2", "--k1", "1", "--k2", "2", "--cp", "10", "--cnp", "1")
    path = tmp_path / "s0.json"
    path.write_text(json.dumps(json.loads(text)["network"]))
    code, out = call("verify", "--network", str(path), "--k1", "1", "--k2", "2", "--method", "brute")
    assert code == 0 and json.loads(out)["method"] == "brute"


def test_verify_disconnected_exit_2(tmp_path):
    net = TwoLayerNetwork.from_edges(2, 2, nonprotected=[(1, 2), (3, 4)])
    code, out = call("verify", "--network", write_net(tmp_path, net), "--k1", "0", "--k2", "0")
    rep = json.loads(out)
    assert code == 2
    assert rep["resistant"] is False and rep["witness_attack"] == []


def test_verify_budget_exit_3(tmp_path):
    pairs = [(u, v) for u in range(1, 21) for v in range(u + 1, 21)]
    net = TwoLayerNetwork.from_edges(10, 10, nonprotected=pairs)
    code, _ = call("verify", "--network", write_net(tmp_path, net), "--k1", "15", "--k2", "15", "--method", "brute")
    assert code == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["design", "--n1", "20"],
        ["design", "--n1", "x", "--n2", "5", "--k1", "5", "--k2", "9", "--cp", "1", "--cnp", "1"],
        design_args(cp="1.1234567"),
        ["verify", "--network", "/nonexistent.json", "--k1", "1", "--k2", "1"],
        ["sweep", "--n1", "4", "--n2", "2", "--k1", "1", "--cp", "1", "--cnp", "1", "--k2-from", "5", "--k2-to", "3"],
        ["frobnicate"],
    ],
)
def test_usage_exit_1(argv, capsys):
    assert call(*argv)[0] == 1


def test_usage_error_names_flag(capsys):
    call("design", "--n1", "20")
    assert "--n2" in capsys.readouterr().err


def test_infeasible_exit_4():
    assert call(*design_args(k2="3"))[0] == 4
    assert call(*design_args(cp="1/2"))[0] == 4


def test_rational():
    assert rational("5") == 5
    assert rational("21/4") == Fraction(21, 4)
    assert rational("3.15") == Fraction(63, 20)
    assert rational("0.000001") == Fraction(1, 10**6)
    for bad in ("1.1234567", "1/0", "abc"):
        with pytest.raises(Exception):
            rational(bad)


def test_bound_csv():
    code, text = call("bound", "--n1", "20", "--n2", "5", "--k1", "5", "--k2", "9")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert code == 0 and len(rows) == 25
    by_label = {r["segment_label"]: r for r in rows}
    assert by_label["A"]["ceil_phi"] == "85"
    assert by_label["C"]["ceil_phi"] == "63"
    assert by_label["E"]["ceil_phi"] == "0"


def test_sweep_csv():
    code, text = call("sweep", "--n1", "20", "--n2", "10", "--k1", "5", "--cp", "5", "--cnp", "1",
                      "--k2-from", "5", "--k2-to", "14")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert code == 0
    assert [r["strategy"] for r in rows] == ["S0"] * 4 + ["SN2M1"] * 6
    assert [r["p"] for r in rows[4:]] == ["9"] * 6


def test_sweep_error_rows(capsys):
    code, text = call("sweep", "--n1", "20", "--n2", "5", "--k1", "5", "--cp", "5", "--cnp", "1",
                      "--k2-from", "4", "--k2-to", "5")
    lines = text.strip().splitlines()
    assert lines[1] == "4,error,,,,"
    assert "k2=4" in capsys.readouterr().err


def test_reliability_csv(tmp_path, capsys):
    net = TwoLayerNetwork.from_edges(1, 1, nonprotected=[(1, 2)])
    code, text = call("reliability", "--network", write_net(tmp_path, net), "--kappa", "0", "0.3",
                      "--trials", "2000", "--seed", "4", "--k1", "0", "--k2", "0")
    rows = list(csv.DictReader(io.StringIO(text)))
    assert code == 0 and [r["kappa"] for r in rows] == ["0.0", "0.3"]
    assert float(rows[0]["mc_estimate"]) == 1.0
    assert "PCG64" in capsys.readouterr().err


DOT_NODE = re.compile(r"^  \d+ \[shape=(box|circle)\];$")
DOT_EDGE = re.compile(r"^  \d+ -- \d+ \[style=(bold|dashed)\];$")


def check_dot(text):
    lines = text.strip().splitlines()
    assert lines[0] == "graph network {" and lines[-1] == "}"
    for line in lines[1:-1]:
        assert DOT_NODE.match(line) or DOT_EDGE.match(line), line


def test_dot_outputs(tmp_path):
    code, text = call(*design_args(), "--format", "dot")
    assert code == 0
    check_dot(text)
    assert text.count("style=bold") == 4 and text.count("style=dashed") == 63
    code, json_text = call(*design_args())
    path = tmp_path / "n.json"
    path.write_text(json.dumps(json.loads(json_text)["network"]))
    code, exported = call("export-dot", "--network", str(path))
    assert exported == text


def test_byte_identical():
    for argv in (design_args(), ["bound", "--n1", "5", "--n2", "3", "--k1", "1", "--k2", "3"]):
        assert call(*argv) == call(*argv)


def test_entry_point():
    proc = subprocess.run([sys.executable, "-m", "resistnet.cli", *design_args("7")], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["strategy"] == "S0"
