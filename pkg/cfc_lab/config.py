"""
⚙️ CFC LAB CONFIGURATION
Runtime defaults, overridable from the environment.
"""

import os
from dataclasses import dataclass, replace
from typing import Optional


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        return default


def _env_bool(name: str, default: bool) -> bool:
    raw = os.getenv(name)
    if raw is None:
        return default
    return raw.strip().lower() in ("1", "true", "yes", "on")


@dataclass(frozen=True)
class LabConfig:
    """Configuration for solver limits, sampling and logging."""
    seed: int = 0
    threads: int = 1
    canonical_limit: int = 10
    edge_limit: int = 20
    path_enum_cap: int = 10 ** 7
    log_level: str = "WARNING"
    log_json: bool = False
    memo_spot_check_rate: float = 0.05

    @classmethod
    def from_env(cls) -> "LabConfig":
        base = cls()
        return cls(
            seed=_env_int("CFC_LAB_SEED", base.seed),
            threads=max(1, _env_int("CFC_LAB_THREADS", base.threads)),
            log_level=os.getenv("CFC_LAB_LOG_LEVEL", base.log_level).upper(),
            log_json=_env_bool("CFC_LAB_LOG_JSON", base.log_json),
        )

    def with_overrides(self, **changes: Optional[object]) -> "LabConfig":
        """Copy with every non-None keyword applied."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


DEFAULT_CONFIG = LabConfig()
