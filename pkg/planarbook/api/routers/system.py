"""System-level API endpoints."""

from __future__ import annotations

from typing import Any, Dict

from fastapi import APIRouter

from ...core import (
    NODE_BUDGET,
    RANK_CAP,
    SEARCH_LK_BOUND,
    SEARCH_MAX_COMPONENTS,
    SEARCH_ROT_BOUND,
    SEARCH_TB_BOUND,
)

router = APIRouter(tags=["system"])


@router.get("/health")
def health() -> Dict[str, bool]:
    """Simple readiness check."""

    return {"ok": True}


@router.get("/config")
def get_config() -> Dict[str, Any]:
    """Enumeration limits and record search defaults in effect."""

    return {
        "node_budget": NODE_BUDGET,
        "rank_cap": RANK_CAP,
        "search": {
            "max_components": SEARCH_MAX_COMPONENTS,
            "tb_bound": SEARCH_TB_BOUND,
            "rot_bound": SEARCH_ROT_BOUND,
            "lk_bound": SEARCH_LK_BOUND,
        },
    }


__all__ = ["router"]
