"""Intersection form endpoints."""

from __future__ import annotations

from typing import Any, Dict

from fastapi import APIRouter

from ...services import parse_form
from ...services.reports import verdict_to_dict
from ..errors import http_errors, require_text

router = APIRouter(tags=["forms"])


@router.post("/obstruct")
def obstruct(body: Dict[str, Any]) -> Dict[str, Any]:
    """Planarity verdict, with the inertia of the form."""

    with http_errors():
        return verdict_to_dict(parse_form(require_text(body, "form")))


__all__ = ["router"]
