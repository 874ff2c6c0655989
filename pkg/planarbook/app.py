"""FastAPI application factory."""

from __future__ import annotations

from fastapi import FastAPI

from .api import register_routes
from .core import configure_logging


def create_app(verbose: bool = False) -> FastAPI:
    configure_logging(verbose)
    app = FastAPI(title="Planar Open Book API", version="0.1.0")
    register_routes(app)
    return app


app = create_app()


if __name__ == "__main__":
    import uvicorn

    uvicorn.run("planarbook.app:app", host="127.0.0.1", port=3000)
