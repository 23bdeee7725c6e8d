"""Runtime caps, overridable via the LOGIC1939_CAPS environment variable.

The variable holds comma-separated key=value pairs, e.g.

    LOGIC1939_CAPS="vars=16,nodes=50000,universe=6"

Unknown keys are rejected so typos do not silently pass.
"""

import os
from dataclasses import dataclass

ENV_VAR = "LOGIC1939_CAPS"


@dataclass(frozen=True)
class Config:
    var_cap: int = 24
    node_cap: int = 500_000
    universe_cap: int = 12

    @staticmethod
    def from_env(env=None):
        raw = (env if env is not None else os.environ).get(ENV_VAR, "")
        kwargs = {}
        if raw.strip():
            for item in raw.split(","):
                item = item.strip()
                if not item:
                    continue
                if "=" not in item:
                    raise ValueError(f"bad {ENV_VAR} entry {item!r}, want key=value")
                key, val = item.split("=", 1)
                key = key.strip()
                field = {"vars": "var_cap", "nodes": "node_cap", "universe": "universe_cap"}.get(key)
                if field is None:
                    raise ValueError(f"unknown {ENV_VAR} key {key!r}")
                kwargs[field] = int(val)
        return Config(**kwargs)


DEFAULT = Config()
