import json

import pytest
from cli_cases import CASES, run

FAST = ["enddeg-Y2", "reduce-Kaleph", "gridminor-grid", "minimal-check", "thresholds", "reduce-double-ray"]


@pytest.mark.parametrize("case", FAST)
def test_byte_identical_across_processes(case):
    a, b = run(CASES[case]), run(CASES[case])
    assert a == b and a[1]


def test_exit_codes():
    assert run(CASES["enddeg-Y2"])[0] == 0
    assert run(CASES["reduce-double-ray"])[0] == 2
    assert run(["gallery", "make", "nope"])[0] == 3
    assert run(["enddeg", "Y", "--params", "{bad"])[0] == 3
    assert run(["minimal", "check", "cycle", "--params", '{"n":6}', "--k", "3", "--mode", "edge-min-kconn"])[0] == 1


def test_input_error_message_on_stderr():
    code, out, err = run(["enddeg", "Y", "--params", "{bad"])
    assert code == 3 and b"line 1" in err and not out


def test_enddeg_value():
    est = json.loads(run(CASES["enddeg-Y2"])[1])["estimate"]
    assert est["lower"] == est["upper"] == "7"


def test_thresholds_girth():
    assert json.loads(run(CASES["thresholds"])[1])["girth"] == 19


def test_grid_cert_round_trip_and_tamper(tmp_path):
    ballf = tmp_path / "ball.json"
    code, out, _ = run([*CASES["gridminor-grid"], "--ball-out", str(ballf)])
    assert code == 0
    cert = json.loads(out)
    certf = tmp_path / "cert.json"
    certf.write_text(json.dumps(cert))
    code, out, _ = run(["verify-cert", str(certf), str(ballf)])
    assert code == 0 and json.loads(out)["valid"]
    cert["columns"][1][0] = cert["columns"][0][0]
    certf.write_text(json.dumps(cert))
    code, out, _ = run(["verify-cert", str(certf), str(ballf)])
    assert code == 1 and not json.loads(out)["valid"]


def test_transcript_round_trip(tmp_path):
    f = tmp_path / "t.json"
    code, out, _ = run(CASES["reduce-Kaleph"])
    f.write_bytes(out)
    assert run(["verify-cert", str(f)])[0] == 0
    obj = json.loads(out)
    obj["result"]["vertices"] = obj["result"]["vertices"][:2]
    f.write_text(json.dumps(obj))
    assert run(["verify-cert", str(f)])[0] == 1


def test_minimality_report_round_trip(tmp_path):
    g = tmp_path / "g.json"
    assert run(["gallery", "make", "cycle", "--params", '{"n":6}', "--out", str(g)])[0] == 0
    code, out, _ = run(["minimal", "check", "--graph", str(g), "--k", "2", "--mode", "vertex-min-kconn"])
    assert code == 0
    r = tmp_path / "r.json"
    r.write_bytes(out)
    assert run(["verify-cert", str(r), str(g)])[0] == 0
    obj = json.loads(out)
    obj["verdict"] = False
    r.write_text(json.dumps(obj))
    assert run(["verify-cert", str(r), str(g)])[0] == 1


def test_dot_output():
    code, out, _ = run(["ball", "ladder", "--radius", "2", "--format", "dot"])
    assert code == 0 and out.startswith(b"graph")


def test_gallery_verify_entry():
    code, out, _ = run(["gallery", "verify", "Y", "--params", '{"l":2}'])
    assert code == 0 and json.loads(out)["status"] == "pass"
