import json
import math
from unittest.mock import patch

import numpy as np
import pytest
from click.testing import CliRunner

from src import __version__
from src.cli import EXIT_INPUT, EXIT_NUMERICAL, cli, run
from src.errors import NumericalError
from src.freeunitary import example_family_diagonal
from src.report import canonical_json


def invoke_json(runner: CliRunner, args):
    result = runner.invoke(cli, args)
    assert result.exit_code == 0, result.output
    return json.loads(result.output), result.output


def test_rootsys_e6(runner: CliRunner) -> None:
    data, _ = invoke_json(runner, ["rootsys", "--type", "E6", "--q", "0.5"])
    assert data["upsilon"] == 2
    assert data["pairing"] == [16, 22, 30, 42, 30, 16]
    assert data["reference_upsilon"] == {"E6": 2}
    inner = data["table"]["invariants"]["T_tauInn"]
    assert inner["generator"] == pytest.approx(math.pi / (2 * math.log(2)), rel=1e-11)
    assert data["table"]["symbolic"]["T_tauInn"] == "pi/(2*log(q))*Z"
    assert inner["exact"] == {"coefficient": "1/2", "unit": {"tag": "pi_over_log", "base": 0.5, "label": "q"}}
    assert data["consistency"] == {"modular_intersection": True, "inner_intersections": True,
                                   "half_scaling": True}


def test_rootsys_sweep(runner: CliRunner) -> None:
    data, _ = invoke_json(runner, ["rootsys", "--sweep", "8"])
    assert data["all_agree"] is True
    assert {row["type"] for row in data["sweep"]} >= {"A8", "E8", "F4", "G2"}


def test_rootsys_needs_exactly_one_mode(runner: CliRunner) -> None:
    assert runner.invoke(cli, ["rootsys"]).exit_code == EXIT_INPUT
    assert runner.invoke(cli, ["rootsys", "--type", "A2", "--sweep", "4"]).exit_code == EXIT_INPUT


def test_fusion_fuse(runner: CliRunner) -> None:
    data, _ = invoke_json(runner, ["fusion", "--fuse", "a,b"])
    assert data["terms"] == [["ab", 1], ["e", 1]]
    data, _ = invoke_json(runner, ["fusion", "--fuse", "abab,abab"])
    assert data["terms"][0] == ["abababab", 1]
    assert data["terms"][-1] == ["e", 1]


def test_fusion_dim_and_thmun(runner: CliRunner) -> None:
    data, _ = invoke_json(runner, ["fusion", "--dim", "ab", "--N", "2", "--q", "0.5"])
    assert data["dim"] == 3
    assert data["qdim"] == pytest.approx(5.25)
    assert data["alternating"] is True

    data, _ = invoke_json(runner, ["fusion", "--thmun", "--q", "0.5", "--nmax", "200"])
    assert data["mode"] == "thmun"
    assert data["limit"] == pytest.approx(0.5625)
    assert data["minimum"] > 0.5
    assert data["sequence"][0] == [1, 0.5, 2.0, 2.5]

    alias, _ = invoke_json(runner, ["fusion", "--un-ratio", "--q", "0.5", "--nmax", "200"])
    assert alias == data


def test_fusion_thmun_exit_code(capsys) -> None:
    assert run(["fusion", "--thmun", "--q", "0.5", "--nmax", "50"]) == 0
    assert json.loads(capsys.readouterr().out)["limit"] == pytest.approx(0.5625)


def test_fusion_dim_of_long_word(capsys) -> None:
    assert run(["fusion", "--dim", "ab" * 1500, "--N", "2", "--q", "0.5"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["dim"] == 3001
    assert data["qdim"] is None


def test_fusion_bad_word(runner: CliRunner) -> None:
    result = runner.invoke(cli, ["fusion", "--fuse", "ac,b"])
    assert result.exit_code == EXIT_INPUT
    assert "ac" in result.output


def test_known_azb2(runner: CliRunner) -> None:
    data, _ = invoke_json(runner, ["known", "--case", "azb2", "--q", "0.5"])
    assert data["G"]["invariants"]["Mod"]["generator"] == pytest.approx(math.pi / math.log(2), rel=1e-11)
    assert data["G"]["symbolic"]["Mod"] == "pi/log(q)*Z"
    assert data["q"] == 0.5
    assert "citation" in data
    assert all(data["consistency"]["G"].values())


def test_ufp_from_spectrum(runner: CliRunner, spectrum_file) -> None:
    fam = example_family_diagonal(2)
    data, _ = invoke_json(runner, ["ufp", "--spectrum", spectrum_file(fam.mu, ["2", "7", "-8"])])
    assert data["table"]["symbolic"]["T_tauInn"] == "2*pi/(5*log(mu))*Z"
    assert data["table"]["symbolic"]["Mod_dual"] == "pi/log(mu)*Z"
    assert data["factor"]["kind"] == "III_mu"
    assert data["mod_trichotomy_holds"] is True


def test_ufp_raw_spectrum_is_flagged(runner: CliRunner, spectrum_file) -> None:
    path = spectrum_file(0.5, ["1", "2"])
    assert runner.invoke(cli, ["ufp", "--spectrum", path]).exit_code == EXIT_INPUT
    data, _ = invoke_json(runner, ["ufp", "--spectrum", path, "--raw"])
    assert data["spectrum"]["balance_checked"] is False


def test_ufp_from_matrix_with_icc(runner: CliRunner, f_matrix_file) -> None:
    path = f_matrix_file(np.diag([1.0, 1.0, 2.0]).tolist())
    data, _ = invoke_json(runner, ["ufp", "--matrix", path, "--n-icc", "2"])
    assert data["spectrum"]["mode"] == "float"
    assert data["icc"]["n"] == 2
    assert data["icc"]["sufficient_condition_holds"] is False


def test_icc_identity(runner: CliRunner, f_matrix_file) -> None:
    data, _ = invoke_json(runner, ["icc", "--matrix", f_matrix_file(np.eye(4).tolist()), "--n", "3"])
    assert data["c"] == 0
    assert data["exact_condition_holds"] is True
    assert data["sufficient_condition_holds"] is True


def test_icc_large_n_exits_cleanly(capsys, f_matrix_file) -> None:
    path = f_matrix_file(np.diag([1.0, 1.0, 2.0]).tolist())
    assert run(["icc", "--matrix", path, "--n", "200"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["D_n"] is None
    assert data["D_n_overflow"] is True
    assert data["exact_condition_holds"] is False
    assert data["sufficient_condition_holds"] is False


def test_json_output_is_canonical(runner: CliRunner) -> None:
    for args in (["rootsys", "--type", "A2xG2"], ["known", "--case", "eq2"], ["fusion", "--un-ratio"]):
        data, text = invoke_json(runner, args)
        assert canonical_json(data) + "\n" == text


def test_meta_block_and_flag_precedence(runner: CliRunner, tmp_path, monkeypatch) -> None:
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"rel_tol": 1e-7, "lattice_max_denominator": 500}), encoding="utf-8")
    monkeypatch.setenv("QGINV_CONFIG", str(path))
    data, _ = invoke_json(runner, ["--rel-tol", "1e-8", "known", "--case", "azb1"])
    meta = data["meta"]
    assert meta["tool"] == "qginv"
    assert meta["version"] == __version__
    assert meta["config"]["rel_tol"] == 1e-8
    assert meta["config"]["lattice_max_denominator"] == 500


def test_markdown_output(runner: CliRunner) -> None:
    result = runner.invoke(cli, ["--format", "markdown", "known", "--case", "eq2", "--q", "0.5"])
    assert result.exit_code == 0
    assert result.output.startswith("# qginv known")
    assert "## G: scaling (E_q(2))" in result.output
    assert "pi/log(q)*Z" in result.output


def test_run_exit_codes(capsys, f_matrix_file) -> None:
    assert run(["fusion", "--fuse", "a,b"]) == 0
    assert json.loads(capsys.readouterr().out)["terms"] == [["ab", 1], ["e", 1]]

    assert run(["rootsys", "--type", "H3"]) == EXIT_INPUT
    assert "H3" in capsys.readouterr().err

    assert run(["known", "--case", "eq2", "--q", "2"]) == EXIT_INPUT
    assert run(["nonsense"]) == EXIT_INPUT

    singular = f_matrix_file([[1, 1], [1, 1]])
    assert run(["ufp", "--matrix", singular]) == EXIT_NUMERICAL
    assert "singular" in capsys.readouterr().err


def test_numerical_failure_exit_code(runner: CliRunner, f_matrix_file) -> None:
    with patch("src.cli.icc_constants", side_effect=NumericalError("no convergence")):
        result = runner.invoke(cli, ["icc", "--matrix", f_matrix_file(np.eye(2).tolist())])
    assert result.exit_code == EXIT_NUMERICAL
    assert "no convergence" in result.output


def test_version(runner: CliRunner) -> None:
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.output
