"""Core configuration and infrastructure helpers."""

from .config import (
    NODE_BUDGET,
    RANK_CAP,
    SEARCH_LK_BOUND,
    SEARCH_MAX_COMPONENTS,
    SEARCH_ROT_BOUND,
    SEARCH_TB_BOUND,
)
from .logging import configure_logging

__all__ = [
    "NODE_BUDGET",
    "RANK_CAP",
    "SEARCH_LK_BOUND",
    "SEARCH_MAX_COMPONENTS",
    "SEARCH_ROT_BOUND",
    "SEARCH_TB_BOUND",
    "configure_logging",
]
