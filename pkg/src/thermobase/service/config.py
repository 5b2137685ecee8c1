"""Service configuration from environment variables."""

from __future__ import annotations

import os
from dataclasses import dataclass


@dataclass(frozen=True)
class ServiceConfig:
    data_dir: str | None = None
    port: int = 8340
    admin_token: str = ""  # empty disables all admin routes
    resolver_stub: bool = False
    ui_dir: str | None = None

    @classmethod
    def from_env(cls, **overrides) -> "ServiceConfig":
        env = os.environ
        values = dict(
            data_dir=env.get("THERMOBASE_DATA_DIR") or None,
            port=int(env.get("THERMOBASE_PORT", "8340")),
            admin_token=env.get("THERMOBASE_ADMIN_TOKEN", ""),
            resolver_stub=env.get("THERMOBASE_RESOLVER_STUB", "") in ("1", "true", "yes"),
            ui_dir=env.get("THERMOBASE_UI_DIR") or None,
        )
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)
