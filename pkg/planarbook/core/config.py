"""Application settings and environment helpers."""

from __future__ import annotations

import os

from dotenv import load_dotenv

load_dotenv(override=False)


def _env_int(name: str, default: int) -> int:
    """Return an integer environment variable or the given default."""

    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw.strip())
    except ValueError as exc:
        raise RuntimeError(f"{name} must be an integer") from exc
    if value <= 0:
        raise RuntimeError(f"{name} must be positive")
    return value


# Short-vector enumeration ---------------------------------------------------
# The node budget is the only setting the CLI lets the environment override.
NODE_BUDGET = _env_int("PLANARBOOK_NODE_BUDGET", 2_000_000)
RANK_CAP = 16


# Record search defaults -----------------------------------------------------
SEARCH_MAX_COMPONENTS = 3
SEARCH_TB_BOUND = 3
SEARCH_ROT_BOUND = 2
SEARCH_LK_BOUND = 2


__all__ = [
    "NODE_BUDGET",
    "RANK_CAP",
    "SEARCH_LK_BOUND",
    "SEARCH_MAX_COMPONENTS",
    "SEARCH_ROT_BOUND",
    "SEARCH_TB_BOUND",
]
