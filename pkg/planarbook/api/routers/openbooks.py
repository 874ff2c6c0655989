"""Open book moves and their invariants."""

from __future__ import annotations

from typing import Any, Dict

from fastapi import APIRouter, HTTPException

from ...services import (
    identity_open_book,
    lutz_twist,
    make_curve,
    murasugi_sum,
    parse_openbook,
    plan_d3_steps,
    positive_stabilization,
    realize_overtwisted,
    start_tracking,
)
from ...services.documents import parse_rational
from ...services.reports import invariants_to_dict, openbook_to_dict
from ..errors import http_errors, optional_ints, require_text

router = APIRouter(tags=["openbooks"])


@router.post("/invariants")
def invariants(body: Dict[str, Any]) -> Dict[str, Any]:
    """First homology of the open book's 3-manifold."""

    with http_errors():
        return invariants_to_dict(parse_openbook(require_text(body, "openbook")))


@router.post("/stabilize")
def stabilize(body: Dict[str, Any]) -> Dict[str, Any]:
    with http_errors():
        ob = parse_openbook(require_text(body, "openbook"))
        stabilized, _ = positive_stabilization(ob, optional_ints(body, "through"))
        return openbook_to_dict(stabilized)


@router.post("/sum")
def murasugi(body: Dict[str, Any]) -> Dict[str, Any]:
    """Murasugi sum of ``first`` and ``second``."""

    with http_errors():
        first = parse_openbook(require_text(body, "first"))
        second = parse_openbook(require_text(body, "second"))
        return openbook_to_dict(murasugi_sum(first, second))


@router.post("/lutz")
def lutz(body: Dict[str, Any]) -> Dict[str, Any]:
    orient = body.get("orient")
    if orient not in (1, -1) or isinstance(orient, bool):
        raise HTTPException(status_code=400, detail="orient must be +1 or -1")
    with http_errors():
        ob = parse_openbook(require_text(body, "openbook"))
        curve = make_curve(ob.page, optional_ints(body, "curve"))
        return openbook_to_dict(lutz_twist(start_tracking(ob), curve, orient))


@router.post("/realize-ot")
def realize_ot(body: Dict[str, Any]) -> Dict[str, Any]:
    """Overtwisted structure with target d3 (and d2 difference over a base book)."""

    target = body.get("d3")
    if not isinstance(target, str):
        raise HTTPException(status_code=400, detail="d3 must be a rational string such as '-3/2'")
    with http_errors():
        base = body.get("base")
        book = parse_openbook(require_text(body, "base")) if base is not None else identity_open_book(0)
        delta = optional_ints(body, "d2") if "d2" in body else [0] * book.page.holes
        return openbook_to_dict(
            realize_overtwisted(book, delta, plan_d3_steps(parse_rational(target)))
        )


__all__ = ["router"]
