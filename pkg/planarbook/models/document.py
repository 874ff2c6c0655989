"""Text documents read and written by the CLI and HTTP surfaces."""

from __future__ import annotations

from typing import Literal, Union

from pydantic import BaseModel, ConfigDict

from .lattice import IntersectionForm
from .openbook import OpenBook
from .surgery import ContactSurgeryRecord


class Document(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: Literal["openbook", "surgery", "form"]
    payload: Union[OpenBook, ContactSurgeryRecord, IntersectionForm]


__all__ = ["Document"]
