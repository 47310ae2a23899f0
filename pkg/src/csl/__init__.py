"""Gaps in the cycle spectrum of 3-connected plane graphs.

Plane graphs are rotation systems (:mod:`csl.plane`); bounded cycle-length
search lives in :mod:`csl.spectrum`, the gap families in
:mod:`csl.constructions`, the reduction pipeline in :mod:`csl.reduction`
and the command line in :mod:`csl.cli`.
"""

from .constructions import Family, FamilySpec, Fragment, build_family, default_family, make_fragment
from .errors import BudgetExceeded, CSLError, StructuralError
from .formats import read_planar_code, to_dot, write_planar_code
from .plane import (
    FaceRef,
    PlaneGraph,
    build_from_coordinates,
    build_from_rotation,
    contract_edge,
    contract_triangles,
    is_k_connected,
    resubdivide,
    split_vertex,
    suppress_degree_two,
)
from .polyhedra import named
from .reduction import (
    classify_faces,
    counting_report,
    discharge,
    make_subcubic,
    reduce_to_g_prime,
    validate_lemma_properties,
)
from .spectrum import (
    SearchBudget,
    circumference,
    enumerate_cycle_lengths_upto,
    full_spectrum_oracle,
    gap_report,
    has_cycle_in,
)
from .values import f, f3

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CSLError",
    "FaceRef",
    "Family",
    "FamilySpec",
    "Fragment",
    "PlaneGraph",
    "SearchBudget",
    "StructuralError",
    "build_family",
    "build_from_coordinates",
    "build_from_rotation",
    "circumference",
    "classify_faces",
    "contract_edge",
    "contract_triangles",
    "counting_report",
    "default_family",
    "discharge",
    "enumerate_cycle_lengths_upto",
    "f",
    "f3",
    "full_spectrum_oracle",
    "gap_report",
    "has_cycle_in",
    "is_k_connected",
    "make_fragment",
    "make_subcubic",
    "named",
    "read_planar_code",
    "reduce_to_g_prime",
    "resubdivide",
    "split_vertex",
    "suppress_degree_two",
    "to_dot",
    "validate_lemma_properties",
    "write_planar_code",
]
