"""Exact degree-one invariant calculus for homology cylinders over a genus g surface."""

from .boolean import BoolPoly, arf, arf_quotient
from .invariants import (
    SurgeryPresentation,
    beta,
    eta1,
    parse_presentation,
    rochlin_delta,
    structure,
    y2_equivalent,
)
from .quadforms import QForm
from .special import PElem
from .symplectic import HClass, Wedge
from .ygraph import Y, YExpr, close, epsilon, rho

__version__ = "0.1.0"
