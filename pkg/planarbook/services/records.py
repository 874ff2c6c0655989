"""Algebra of contact surgery records that does not depend on open books."""

from __future__ import annotations

from typing import Tuple

from ..models import ContactSurgeryRecord, SurgeryComponent
from .linalg import block_sum


def stabilize_legendrian_record(component: SurgeryComponent, sign: int) -> SurgeryComponent:
    """Positive (``sign=+1``) or negative stabilization of a surgery component."""

    if sign not in (1, -1):
        raise ValueError("stabilization sign must be +1 or -1")
    return component.stabilized(sign)


def split_union(first: ContactSurgeryRecord, second: ContactSurgeryRecord) -> ContactSurgeryRecord:
    """Disjoint union of two diagrams placed in separate balls."""

    return ContactSurgeryRecord(
        components=first.components + second.components,
        linking=block_sum(first.linking, second.linking),
    )


def topological_linking_matrix(record: ContactSurgeryRecord) -> Tuple[Tuple[int, ...], ...]:
    """Linking matrix with the topological framings ``tb + coeff`` on the diagonal."""

    return tuple(
        tuple(
            component.framing if i == j else record.linking[i][j]
            for j in range(record.size)
        )
        for i, component in enumerate(record.components)
    )


def append_component(
    record: ContactSurgeryRecord,
    component: SurgeryComponent,
    linking: Tuple[int, ...],
) -> ContactSurgeryRecord:
    """Add one component with the given linking numbers to the existing ones."""

    if len(linking) != record.size:
        raise ValueError("one linking number per existing component is required")
    rows = [tuple(row) + (linking[i],) for i, row in enumerate(record.linking)]
    rows.append(tuple(linking) + (0,))
    return ContactSurgeryRecord(
        components=record.components + (component,),
        linking=tuple(rows),
    )


__all__ = [
    "append_component",
    "split_union",
    "stabilize_legendrian_record",
    "topological_linking_matrix",
]
