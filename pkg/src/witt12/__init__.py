"""Exact toolkit for the small Witt design S(5,6,12).

Remove one point U from the projective plane of order three and take,
as blocks, the six-point solution sets of the quadratic conditions
q(X) = 2 q(U).  The package provides the GF(3) linear algebra behind
that construction, the plane model, quadric classification, the design
with its block taxonomy and block solver, generic t-design checks, and
the symmetry machinery up to the full automorphism group.
"""

from .checks import (
    DesignParams,
    DesignViolation,
    IncidenceStructure,
    affine_residue,
    derived_design,
    lambda_cascade,
    verify_t_design,
)
from .designfile import (
    DesignDocument,
    DesignFileError,
    document_from_model,
    parse_structured,
    render_structured,
    render_table,
)
from .design import (
    Block,
    BlockSolution,
    ConicExterior,
    LinePairMinusU,
    SymmetricDifference,
    WittModel,
    as_incidence_structure,
    block_of_form,
    block_through,
    classify_block,
    construct,
    rederive_block,
    solve_block_through,
)
from .plane import PLANE, PlaneModel, ProjLine, ProjPoint, collinear_triple_in, normalize
from .quadrics import (
    ConicGeometry,
    QuadraticForm,
    QuadricType,
    canonical_table,
    classify,
    conic_geometry,
    evaluate,
    level_set,
)
from .symmetry import (
    Collineation,
    GroupSummary,
    affinities,
    all_automorphisms,
    all_collineations,
    automorphism_group,
    extend_affinity,
    induced_permutation,
    is_design_automorphism,
    stabilizer_of,
    verify_extension_formula,
)

__all__ = [
    "PLANE",
    "Block",
    "BlockSolution",
    "Collineation",
    "ConicExterior",
    "ConicGeometry",
    "DesignDocument",
    "DesignFileError",
    "DesignParams",
    "DesignViolation",
    "GroupSummary",
    "IncidenceStructure",
    "LinePairMinusU",
    "PlaneModel",
    "ProjLine",
    "ProjPoint",
    "QuadraticForm",
    "QuadricType",
    "SymmetricDifference",
    "WittModel",
    "affine_residue",
    "affinities",
    "all_automorphisms",
    "all_collineations",
    "as_incidence_structure",
    "automorphism_group",
    "block_of_form",
    "block_through",
    "canonical_table",
    "classify",
    "classify_block",
    "collinear_triple_in",
    "conic_geometry",
    "construct",
    "derived_design",
    "document_from_model",
    "evaluate",
    "extend_affinity",
    "induced_permutation",
    "is_design_automorphism",
    "lambda_cascade",
    "level_set",
    "normalize",
    "parse_structured",
    "rederive_block",
    "render_structured",
    "render_table",
    "solve_block_through",
    "stabilizer_of",
    "verify_extension_formula",
    "verify_t_design",
]
