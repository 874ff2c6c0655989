"""Contact surgery record endpoints."""

from __future__ import annotations

from typing import Any, Dict

from fastapi import APIRouter, HTTPException

from ...core.errors import DomainError
from ...services import parse_surgery, search_records
from ...services.documents import format_rational, parse_rational, print_surgery
from ...services.reports import d3_to_dict
from ..errors import http_errors, require_text

router = APIRouter(tags=["surgery"])

_SEARCH_OPTIONS = ("max_components", "tb_bound", "rot_bound", "lk_bound")


@router.post("/d3")
def d3(body: Dict[str, Any]) -> Dict[str, Any]:
    """d3 of the structure obtained by the given contact surgeries on S^3."""

    with http_errors():
        return d3_to_dict(parse_surgery(require_text(body, "surgery")))


@router.post("/search")
def search(body: Dict[str, Any]) -> Dict[str, Any]:
    target = body.get("d3")
    if not isinstance(target, str):
        raise HTTPException(status_code=400, detail="d3 must be a rational string such as '-3/2'")
    options = {}
    for name in _SEARCH_OPTIONS:
        value = body.get(name)
        if value is None:
            continue
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise HTTPException(status_code=400, detail=f"{name} must be a nonnegative integer")
        options[name] = value
    with http_errors():
        goal = parse_rational(target)
        record = next(search_records(goal, **options), None)
        if record is None:
            raise DomainError(f"no record in the search box has d3 = {format_rational(goal)}")
        return {"d3": format_rational(goal), "record": print_surgery(record)}


__all__ = ["router"]
