import json

import numpy as np
import pytest
from click.testing import CliRunner

from src.invariant_config import get_resolution_config


@pytest.fixture(autouse=True)
def fresh_config(monkeypatch):
    """Every test starts from default resolution settings."""
    monkeypatch.delenv("QGINV_CONFIG", raising=False)
    get_resolution_config.cache_clear()
    yield
    get_resolution_config.cache_clear()


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def rng():
    return np.random.default_rng(20240501)


@pytest.fixture
def write_json(tmp_path):
    """Write a JSON payload to a temp file and return its path as str."""
    def _write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)
    return _write


@pytest.fixture
def f_matrix_file(write_json):
    def _matrix(rows):
        n = len(rows)
        entries = [[float(np.real(v)), float(np.imag(v))] for row in rows for v in row]
        return write_json(f"f{n}.json", {"n": n, "entries": entries})
    return _matrix


@pytest.fixture
def spectrum_file(write_json):
    def _spectrum(base, exponents):
        return write_json("spectrum.json", {"base": base, "exponents": [str(e) for e in exponents]})
    return _spectrum
