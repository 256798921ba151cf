import json
import subprocess
import sys
from pathlib import Path

GOLDEN = Path(__file__).parent / "golden" / "table1.json"


def run_cli(*args, **kwargs):
    return subprocess.run(
        [sys.executable, "-m", "pdmkeo.cli", *args],
        capture_output=True,
        text=True,
        **kwargs,
    )


def test_params_name_yy():
    cp = run_cli("params", "--name", "YY")
    assert cp.returncode == 0
    assert json.loads(cp.stdout) == {"xi": "-1/3", "zeta": "1/6", "eta": "0"}


def test_params_expr():
    cp = run_cli("params", "--expr", "1/2 * 1/sqrt(m) p^2 1/sqrt(m)")
    assert cp.returncode == 0
    assert json.loads(cp.stdout) == {"xi": "-1/2", "zeta": "1/4", "eta": "0"}


def test_params_warning_goes_to_stderr():
    cp = run_cli("params", "--name", "DA(1)")
    assert cp.returncode == 0
    assert "warning:" in cp.stderr
    assert json.loads(cp.stdout)["xi"] == "0"


def test_classify_point():
    cp = run_cli("classify", "--xi", "-1/3", "--zeta", "1/6")
    assert cp.returncode == 0
    doc = json.loads(cp.stdout)
    assert doc["labels"] == [{"region": "III", "boundaries": ["upper"]}]


def test_classify_outside_region_exit_code_and_diagnostic():
    cp = run_cli("classify", "--xi", "-1/2", "--zeta", "1/2")
    assert cp.returncode == 1
    assert cp.stdout == ""
    assert cp.stderr.startswith("error:")
    assert "zeta > -xi/2" in cp.stderr
    assert "Traceback" not in cp.stderr


def test_usage_error_exit_code():
    cp = run_cli("classify", "--xi", "-1/2")
    assert cp.returncode == 2
    cp = run_cli("classify", "--xi", "0.5", "--zeta", "0")
    assert cp.returncode == 2  # exactness required: decimals rejected
    cp = run_cli("nosuchcommand")
    assert cp.returncode == 2


def test_invert_yy_point():
    cp = run_cli("invert", "--xi", "-1/3", "--zeta", "1/6", "--class", "III")
    doc = json.loads(cp.stdout)
    assert doc["terms"][0] == {"w": "1/3", "alpha": "0", "beta": "-1", "gamma": "0"}
    assert doc["terms"][1]["w"] == "2/3"


def test_invert_surd_and_float_modes():
    cp = run_cli("invert", "--xi", "-1/4", "--zeta", "1/32", "--class", "vR")
    doc = json.loads(cp.stdout)
    assert doc["terms"][0]["alpha"] == "-1/4+1/8*sqrt(2)"
    assert doc["expression"] is None
    cp = run_cli("invert", "--xi", "-1/4", "--zeta", "1/32", "--class", "vR", "--float")
    doc = json.loads(cp.stdout)
    assert abs(float(doc["terms"][0]["alpha"]) - (-0.25 + 2**0.5 / 8)) < 1e-15


def test_dual_roundtrip_values():
    cp = run_cli("dual", "--xi", "-1/4", "--zeta", "0")
    doc = json.loads(cp.stdout)
    assert doc == {
        "xi": "-1/4",
        "zeta": "0",
        "theta": "-1/16",
        "dual_theta": "1/16",
        "dual_zeta": "1/8",
    }


def test_dual_gw_errors():
    cp = run_cli("dual", "--xi", "-1/2", "--zeta", "0")
    assert cp.returncode == 1
    assert "outside allowed region" in cp.stderr


def test_table1_matches_golden_byte_for_byte():
    cp = run_cli("table1")
    assert cp.returncode == 0
    assert cp.stdout == GOLDEN.read_text()


def test_output_file_and_determinism(tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    assert run_cli("region", "--resolution", "11", "--output", str(out1)).returncode == 0
    assert run_cli("region", "--resolution", "11", "--output", str(out2)).returncode == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_region_csv_long_format():
    cp = run_cli("region", "--resolution", "3", "--format", "csv")
    lines = cp.stdout.strip().split("\n")
    assert lines[0] == "xi,zeta,region,boundaries"
    assert "-1/2,0,vR,lower" in lines
    assert all("," in line for line in lines[1:])


def test_assemble_json_envelope(tmp_path):
    out = tmp_path / "op.json"
    cp = run_cli(
        "assemble", "--name", "ZK", "--profile", "lorentzian:m0=1,lam=1",
        "--n", "8", "--xmin", "-1", "--xmax", "1", "--output", str(out),
    )
    assert cp.returncode == 0
    doc = json.loads(out.read_text())
    assert set(doc) == {"grid", "hbar", "provenance", "matrix"}
    assert doc["grid"]["n"] == 8
    assert len(doc["matrix"]) == 8
    assert doc["provenance"]["pathway"] == "terms"
    assert doc["provenance"]["scheme"] == "central"


def test_assemble_linear_pathway_csv():
    cp = run_cli(
        "assemble", "--name", "BDD", "--profile", "constant:m0=1",
        "--n", "4", "--xmin", "0", "--xmax", "5", "--pathway", "linear", "--format", "csv",
    )
    rows = [line.split(",") for line in cp.stdout.strip().split("\n")]
    assert len(rows) == 4 and len(rows[0]) == 4
    assert float(rows[0][2]) == -0.125


def test_defect_reports_ratio():
    cp = run_cli(
        "defect", "--name", "YY", "--profile", "cosine_bump:m0=1,lam=1",
        "--n", "100", "--xmin", "-1", "--xmax", "1",
    )
    doc = json.loads(cp.stdout)
    assert doc["n"] == 100 and doc["n_refined"] == 200
    assert 3.0 <= doc["ratio"] <= 4.5


def test_spectrum_command_json_and_csv():
    args = (
        "spectrum", "--name", "BDD", "--profile", "constant:m0=1",
        "--potential", "zero", "--n", "300", "--k", "3",
        "--xmin", "0", "--xmax", "3.141592653589793",
    )
    doc = json.loads(run_cli(*args).stdout)
    assert doc["params"]["xi"] == "0"
    assert len(doc["eigenvalues"]) == 3
    assert abs(doc["eigenvalues"][0] - 0.5) < 0.01
    csv = run_cli(*args, "--format", "csv").stdout.strip().split("\n")
    assert csv[0] == "index,eigenvalue"
    assert len(csv) == 4


def test_dualpair_command():
    cp = run_cli(
        "dualpair", "--xi", "-1/4", "--theta", "1/16",
        "--profile", "lorentzian:m0=1,lam=1", "--n", "150", "--k", "2",
    )
    doc = json.loads(cp.stdout)
    assert doc["parameter_identity"] is True
    assert doc["vr"]["alpha_gamma"] == ["-1/2", "0"]
    assert doc["class_i"]["alpha_gamma"] == ["-1/2", "0"]
    assert len(doc["vr"]["eigenvalues"]) == 2


def test_config_file_defaults_and_flag_override(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"xi": "-1/3", "zeta": "1/6"}))
    doc = json.loads(run_cli("classify", "--config", str(cfg)).stdout)
    assert doc["xi"] == "-1/3" and doc["zeta"] == "1/6"
    doc = json.loads(run_cli("classify", "--config", str(cfg), "--zeta", "1/9").stdout)
    assert doc["zeta"] == "1/9"


def test_parse_error_diagnostic_includes_position():
    cp = run_cli("params", "--expr", "1/2 * p m^(-1 p")
    assert cp.returncode == 1
    assert "position" in cp.stderr
