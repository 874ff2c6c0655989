"""Domain model exports."""

from .document import Document
from .invariants import AbelianGroup, HomotopyData
from .lattice import IntersectionForm, PlanarVerdict
from .openbook import LutzTracker, OpenBook, TwistLetter
from .page import Curve, PlanarPage
from .surgery import (
    ContactSurgeryRecord,
    LegendrianKnot,
    LegendrianPage,
    LinkingPresentation,
    SurgeryComponent,
)

__all__ = [
    "AbelianGroup",
    "ContactSurgeryRecord",
    "Curve",
    "Document",
    "HomotopyData",
    "IntersectionForm",
    "LegendrianKnot",
    "LegendrianPage",
    "LinkingPresentation",
    "LutzTracker",
    "OpenBook",
    "PlanarPage",
    "PlanarVerdict",
    "SurgeryComponent",
    "TwistLetter",
]
