"""JSON-ready views shared by the CLI and the HTTP routers."""

from __future__ import annotations

import logging
from typing import Any, Dict, Optional

from ..core.errors import NonLaminarWord
from ..models import AbelianGroup, ContactSurgeryRecord, IntersectionForm, OpenBook
from .documents import format_rational, print_openbook, print_surgery
from .invariants import d3_invariant, first_homology, homotopy_data
from .lattice import inertia, planar_support_verdict
from .presentation import to_linking_presentation

logger = logging.getLogger(__name__)


def group_to_dict(group: AbelianGroup) -> Dict[str, Any]:
    return {"rank": group.free_rank, "torsion": list(group.torsion)}


def invariants_to_dict(ob: OpenBook) -> Dict[str, Any]:
    """H_1 and word data; raises NonLaminarWord when the word has no presentation."""

    group = first_homology(to_linking_presentation(ob))
    return {"h1": group_to_dict(group), "planar": ob.is_planar, "word_length": ob.word_length}


def openbook_to_dict(ob: OpenBook) -> Dict[str, Any]:
    """Result of an open book move: the document plus recomputed invariants."""

    h1: Optional[Dict[str, Any]] = None
    try:
        h1 = group_to_dict(first_homology(to_linking_presentation(ob)))
    except NonLaminarWord as exc:
        logger.debug("H_1 unavailable: %s", exc)
    data = homotopy_data(ob)
    return {
        "openbook": print_openbook(ob),
        "record": print_surgery(ob.record) if ob.record is not None else None,
        "h1": h1,
        "planar": ob.is_planar,
        "word_length": ob.word_length,
        "d2": list(data.d2_class) if ob.lutz is not None else None,
        "d3": format_rational(data.d3),
    }


def d3_to_dict(record: ContactSurgeryRecord) -> Dict[str, Any]:
    return {"d3": format_rational(d3_invariant(record))}


def verdict_to_dict(form: IntersectionForm) -> Dict[str, Any]:
    verdict = planar_support_verdict(form)
    return {
        "status": verdict.status,
        "reasons": list(verdict.reasons),
        "inertia": list(inertia(form)),
    }


__all__ = [
    "d3_to_dict",
    "group_to_dict",
    "invariants_to_dict",
    "openbook_to_dict",
    "verdict_to_dict",
]
