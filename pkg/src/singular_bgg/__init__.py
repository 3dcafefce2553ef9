"""Singular BGG complexes on type-A Grassmannians G(k, n)."""

from .bbw import LabeledDiagram, label_diagram, label_vertex
from .complex import (
    SingularComplex,
    assemble,
    build_complex,
    check_suite,
    enright_shelton_image,
    oracle_check,
    shift_check,
    stein_cover_count,
)
from .hasse import (
    HasseDiagram,
    RelativeVertex,
    build_regular_hasse,
    build_relative_hasse,
    start_vertex,
    successors,
)
from .pipeline import PipelineResult, emit_json, parse_json, run_pipeline
from .weights import (
    OrbitElement,
    SingularityProfile,
    Weight,
    analyze_singularity,
    compute_orbit,
    delete_pairs,
    grassmannian_length,
    insert_pairs,
    rho,
)

__version__ = "0.1.0"
