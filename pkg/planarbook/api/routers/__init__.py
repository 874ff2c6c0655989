"""Aggregate API routers."""

from fastapi import APIRouter

from .forms import router as forms_router
from .openbooks import router as openbooks_router
from .surgery import router as surgery_router
from .system import router as system_router

ALL_ROUTERS: tuple[APIRouter, ...] = (
    system_router,
    openbooks_router,
    surgery_router,
    forms_router,
)

__all__ = ["ALL_ROUTERS"]
