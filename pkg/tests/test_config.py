import json
import os
from unittest.mock import patch

import pytest

from src.errors import InputError
from src.invariant_config import (
    BASE_DIR,
    CONFIG_ENV_VAR,
    ResolutionConfig,
    get_resolution_config,
    load_config_file,
)


def test_defaults() -> None:
    cfg = get_resolution_config()
    assert cfg == ResolutionConfig()
    assert cfg.rel_tol == 1e-9
    assert cfg.max_denominator == 10**6
    assert cfg.lattice_rel_tol == 1e-10
    assert cfg.lattice_max_denominator == 1000
    assert cfg.eig_threshold == 1e-13


def test_env_file_overrides_defaults(tmp_path) -> None:
    path = tmp_path / "qginv.json"
    path.write_text(json.dumps({"rel_tol": "1e-7", "max_sweeps": 50}), encoding="utf-8")
    with patch.dict(os.environ, {CONFIG_ENV_VAR: str(path)}):
        get_resolution_config.cache_clear()
        cfg = get_resolution_config()
    assert cfg.rel_tol == 1e-7
    assert cfg.max_sweeps == 50
    assert isinstance(cfg.max_sweeps, int)
    assert cfg.max_denominator == 10**6


def test_unknown_and_bad_keys(tmp_path) -> None:
    unknown = tmp_path / "unknown.json"
    unknown.write_text(json.dumps({"tolerance": 1}), encoding="utf-8")
    with pytest.raises(InputError, match="tolerance"):
        load_config_file(str(unknown))

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"rel_tol": "tiny"}), encoding="utf-8")
    with pytest.raises(InputError):
        load_config_file(str(bad))

    broken = tmp_path / "broken.json"
    broken.write_text("{not json", encoding="utf-8")
    with pytest.raises(InputError):
        load_config_file(str(broken))

    with pytest.raises(InputError):
        load_config_file(str(tmp_path / "missing.json"))


def test_relative_paths_resolve_from_project_root() -> None:
    with pytest.raises(InputError) as info:
        load_config_file("no-such-config.json")
    assert str(BASE_DIR) in str(info.value)


def test_relative_path_prefers_working_directory(tmp_path, monkeypatch) -> None:
    (tmp_path / "local.json").write_text(json.dumps({"max_sweeps": 77}), encoding="utf-8")
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv(CONFIG_ENV_VAR, "local.json")
    get_resolution_config.cache_clear()
    assert get_resolution_config().max_sweeps == 77


def test_validation_and_overrides() -> None:
    with pytest.raises(InputError):
        ResolutionConfig(rel_tol=0.0)
    with pytest.raises(InputError):
        ResolutionConfig(max_sweeps=0)

    cfg = ResolutionConfig()
    assert cfg.with_overrides(rel_tol=None) is cfg
    tighter = cfg.with_overrides(rel_tol=1e-12, max_denominator=None)
    assert tighter.rel_tol == 1e-12
    assert tighter.max_denominator == cfg.max_denominator
    assert set(cfg.to_dict()) == {
        "rel_tol", "max_denominator", "lattice_rel_tol", "lattice_max_denominator",
        "eig_threshold", "max_sweeps", "kac_threshold",
    }
