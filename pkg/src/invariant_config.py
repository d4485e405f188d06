from __future__ import annotations

import json
import logging
import os
from dataclasses import dataclass, fields, replace
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional
from dotenv import load_dotenv

from src.errors import InputError

# Ensure .env (if present) is loaded before we read env vars.
load_dotenv()

BASE_DIR = Path(__file__).resolve().parents[1]
CONFIG_ENV_VAR = "QGINV_CONFIG"

logger = logging.getLogger(__name__)


def _resolve_path(value: str) -> Path:
    """Relative paths are looked up in the working directory first, then in the project root."""
    path = Path(value)
    if path.is_absolute():
        return path
    local = Path.cwd() / path
    if local.exists():
        return local
    return BASE_DIR / path


@dataclass(frozen=True)
class ResolutionConfig:
    rel_tol: float = 1e-9
    max_denominator: int = 10**6
    lattice_rel_tol: float = 1e-10
    lattice_max_denominator: int = 1000
    eig_threshold: float = 1e-13
    max_sweeps: int = 100
    kac_threshold: float = 1e-10

    def __post_init__(self) -> None:
        for name in ("rel_tol", "lattice_rel_tol", "eig_threshold", "kac_threshold"):
            if not getattr(self, name) > 0:
                raise InputError(f"{name} must be positive, got {getattr(self, name)!r}")
        for name in ("max_denominator", "lattice_max_denominator", "max_sweeps"):
            if int(getattr(self, name)) < 1:
                raise InputError(f"{name} must be at least 1, got {getattr(self, name)!r}")

    def with_overrides(self, **overrides: Any) -> "ResolutionConfig":
        """Return a copy with every non-None override applied (CLI flags land here)."""
        given = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, **given) if given else self

    def to_dict(self) -> Dict[str, Any]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def _coerce(name: str, raw: Any) -> Any:
    kind = {f.name: f.type for f in fields(ResolutionConfig)}[name]
    try:
        return int(raw) if kind in ("int", int) else float(raw)
    except (TypeError, ValueError) as exc:
        raise InputError(f"config key {name!r} has unusable value {raw!r}") from exc


def load_config_file(path: str) -> Dict[str, Any]:
    """Read a JSON config file and keep only known ResolutionConfig keys."""
    resolved = _resolve_path(path)
    try:
        with open(resolved, "r", encoding="utf-8") as f:
            data = json.load(f)
    except OSError as exc:
        raise InputError(f"cannot read config file {str(resolved)!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"config file {str(resolved)!r} is not valid JSON: {exc}") from exc

    if not isinstance(data, dict):
        raise InputError(f"config file {str(resolved)!r} must hold a JSON object")

    known = {f.name for f in fields(ResolutionConfig)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise InputError(f"unknown config key(s) in {str(resolved)!r}: {', '.join(unknown)}")
    return {k: _coerce(k, v) for k, v in data.items()}


@lru_cache(maxsize=1)
def get_resolution_config() -> ResolutionConfig:
    """Return the shared resolution configuration: defaults overlaid by $QGINV_CONFIG."""
    path: Optional[str] = os.environ.get(CONFIG_ENV_VAR)
    if not path:
        logger.debug("get_resolution_config(): no %s set, using defaults", CONFIG_ENV_VAR)
        return ResolutionConfig()
    logger.debug("get_resolution_config(): loading %s", path)
    return ResolutionConfig(**load_config_file(path))
