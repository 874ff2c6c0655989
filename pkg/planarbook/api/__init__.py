"""HTTP surface: routers mirroring the CLI subcommands."""

from __future__ import annotations

from fastapi import FastAPI

from .errors import http_errors
from .routers import ALL_ROUTERS


def register_routes(app: FastAPI) -> None:
    """Mount every router at the application root."""

    for router in ALL_ROUTERS:
        app.include_router(router)


__all__ = ["http_errors", "register_routes"]
