"""Runtime caps and scan defaults, overridable via config file or CLI flags."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Config:
    min_level: int = -12
    max_level: int = 12
    shifts: int = 3
    partition_depth: int = 4
    stopping_depth: int = 12
    max_candidates: int = 200_000
    bounded_slack: float = 1.05

    @classmethod
    def default(cls) -> "Config":
        cfg = cls()
        cap = os.environ.get("WTC_MAX_CANDIDATES")
        if cap:
            cfg = replace(cfg, max_candidates=int(cap))
        return cfg

    def with_overrides(self, **kwargs) -> "Config":
        live = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, **live)


def parse_config_file(path: str) -> dict:
    """key=value lines; '#' comments; ints/floats coerced."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, _, value = line.partition("=")
            key = key.strip()
            value = value.strip()
            try:
                out[key] = int(value)
            except ValueError:
                try:
                    out[key] = float(value)
                except ValueError:
                    out[key] = value
    return out
