"""Translation of package errors into HTTP responses."""

from __future__ import annotations

from contextlib import contextmanager
from typing import Any, Dict, Iterator, List

from fastapi import HTTPException

from ..core.errors import DomainError, ParseError


@contextmanager
def http_errors() -> Iterator[None]:
    """Unreadable documents become 422, failed preconditions 400."""

    try:
        yield
    except ParseError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc
    except (DomainError, ValueError) as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


def require_text(body: Dict[str, Any], field: str) -> str:
    value = body.get(field)
    if not isinstance(value, str):
        raise HTTPException(status_code=400, detail=f"Field {field!r} must hold a text document")
    return value


def optional_ints(body: Dict[str, Any], field: str) -> List[int]:
    value = body.get(field) or []
    if not isinstance(value, list) or any(
        isinstance(item, bool) or not isinstance(item, int) for item in value
    ):
        raise HTTPException(status_code=400, detail=f"Field {field!r} must be a list of integers")
    return value


__all__ = ["http_errors", "optional_ints", "require_text"]
