"""Spanning surfaces for links presented over Heegaard graphs."""

from .extension import BalanceReport, ExtensionPlan, is_balanced, synthesize_extension_link
from .homology import (
    HomologyPresentation,
    NoIntegralSolution,
    certify_homology_sphere,
    determinant,
    link_class,
    presentation_from_graph,
    presentation_text,
    relator_matrix,
    smith_normal_form,
    solve_extension_coefficients,
)
from .model import (
    Circle,
    Crossing,
    CrossingEvent,
    DanglingAttachment,
    Edge,
    HeegaardGraph,
    LinkDiagram,
    Passage,
    Strand,
    TransversalEvent,
    ValidationReport,
    component_walk,
    empty_diagram,
    graph_from_cycles,
    validate_diagram,
    validate_graph,
)
from .plat import (
    Bridge,
    FlatPlat,
    FramingMismatch,
    InsufficientCurves,
    InvalidPlat,
    PlatArc,
    UnderPass,
    compile_heegaard_graph,
    link_components,
    select_characteristic_curves,
    validate_plat,
    writhe,
)
from .surface import (
    OpenChain,
    PairingMatching,
    SpanningSurface,
    UnbalancedVertex,
    assemble_surface,
    count_seifert_circles,
    pairing_matching,
    resolve_crossings,
    spanning_surface,
)

__version__ = "0.1.0"

__all__ = [
    "BalanceReport",
    "Bridge",
    "Circle",
    "Crossing",
    "CrossingEvent",
    "DanglingAttachment",
    "Edge",
    "ExtensionPlan",
    "FlatPlat",
    "FramingMismatch",
    "HeegaardGraph",
    "HomologyPresentation",
    "InsufficientCurves",
    "InvalidPlat",
    "LinkDiagram",
    "NoIntegralSolution",
    "OpenChain",
    "PairingMatching",
    "Passage",
    "PlatArc",
    "SpanningSurface",
    "Strand",
    "TransversalEvent",
    "UnbalancedVertex",
    "UnderPass",
    "ValidationReport",
    "assemble_surface",
    "certify_homology_sphere",
    "compile_heegaard_graph",
    "component_walk",
    "count_seifert_circles",
    "determinant",
    "empty_diagram",
    "graph_from_cycles",
    "is_balanced",
    "link_class",
    "link_components",
    "pairing_matching",
    "presentation_from_graph",
    "presentation_text",
    "relator_matrix",
    "resolve_crossings",
    "select_characteristic_curves",
    "smith_normal_form",
    "solve_extension_coefficients",
    "spanning_surface",
    "synthesize_extension_link",
    "validate_diagram",
    "validate_graph",
    "validate_plat",
    "writhe",
]
