"""Enhanced reduced Alexander modules of virtual link diagrams."""
from .diagram import Diagram, diagram_from_gauss, load_diagram, mirror, reverse_component
from .laurent import LaurentPoly
from .modalg import PresentedModule, compare_enhanced, invariant_report, longitude_signature
from .moves import apply_move, enumerate_sites, random_equivalent, verify_transport
from .peripheral import linking_matrix, linking_number, longitude, torsion_certificate
from .presentation import FreeElement, phi, presentation_matrix, relator

__all__ = [
    "Diagram",
    "FreeElement",
    "LaurentPoly",
    "PresentedModule",
    "apply_move",
    "compare_enhanced",
    "diagram_from_gauss",
    "enumerate_sites",
    "invariant_report",
    "linking_matrix",
    "linking_number",
    "load_diagram",
    "longitude",
    "longitude_signature",
    "mirror",
    "phi",
    "presentation_matrix",
    "random_equivalent",
    "relator",
    "reverse_component",
    "torsion_certificate",
    "verify_transport",
]
