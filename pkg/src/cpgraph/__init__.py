"""Finite models of the annihilator, zero-divisor and weakly zero-divisor
graphs of rings of continuous functions with isolated-point supports."""

from .build import (
    BlowUpGraph,
    Graph,
    LabeledGraph,
    ReducedGraph,
    Vertex,
    ag_adjacent,
    build_blowup,
    build_reduced,
    gamma_adjacent,
    wgamma_adjacent,
)
from .coloring import (
    Coloring,
    chain_coloring,
    chromatic_certificate,
    level_color,
    paper_color,
    verify_coloring,
)
from .errors import (
    CPGraphError,
    ColoringFailure,
    CoverageError,
    ExtensionError,
    InvalidSpaceError,
    ModelViolation,
    MultiplicityError,
    PreconditionError,
    SearchBudgetExceeded,
)
from .isomorphism import (
    GraphIso,
    are_equivalent,
    extend_isomorphism,
    find_isomorphism,
    restrict_isomorphism,
)
from .model import (
    ALEPH0,
    CONTINUUM,
    Cardinal,
    FiniteIsolated,
    GraphKind,
    InfiniteIsolated,
    PointSet,
    enumerate_vertices,
)
from .predict import NOT_CLAIMED, ParamReport, compare, predicted_report

__version__ = "0.1.0"
