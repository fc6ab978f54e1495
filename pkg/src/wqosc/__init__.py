"""Exact creation/annihilation operator families for Wigner quantum oscillators.

The package builds, in exact arithmetic over rational-radical scalars, the
operator families of the basic classical Lie superalgebras that solve the
compatibility conditions of an N-particle D-dimensional harmonic oscillator,
verifies their defining identities, and catalogs every solution for a given
(N, D).
"""

from ._version import __version__
from .catalog import Catalog, SolutionRecord, build_record, catalog_json, enumerate_solutions
from .families import (
    CaoPair,
    CaoSet,
    FamilyId,
    FamilyParams,
    build,
    build_ospB,
    build_ospD1,
    build_ospD2,
    build_sl3,
    build_sl5a,
    build_sl5b,
    label_sign,
    parabose_ops,
    validate_params,
)
from .physics import (
    AssignedOperators,
    PhysParams,
    assign_ND,
    build_H,
    build_RP,
    check_hamilton_heisenberg,
    dagger_report,
    params_from_scalar,
)
from .radicals import RadBasis, RadElement, normalize_radicand, parse_rad, rad_inv, rad_mul, rad_to_float
from .supermatrix import (
    GradedDim,
    Parity,
    ParityError,
    SuperMatrix,
    anticommutator,
    commutator,
    dagger,
    superbracket,
    unit_matrix,
)
from .verify import (
    CheckReport,
    GradingReport,
    cc_scalar,
    check_osp_triple,
    check_parabose,
    check_sl_triple,
    derive_mu_c,
    expected_lambda,
    grading_analysis,
    superjacobi_sample,
)

__all__ = [
    "__version__",
    "RadElement",
    "RadBasis",
    "normalize_radicand",
    "parse_rad",
    "rad_mul",
    "rad_inv",
    "rad_to_float",
    "Parity",
    "ParityError",
    "GradedDim",
    "SuperMatrix",
    "unit_matrix",
    "anticommutator",
    "commutator",
    "superbracket",
    "dagger",
    "FamilyId",
    "FamilyParams",
    "CaoPair",
    "CaoSet",
    "validate_params",
    "label_sign",
    "build",
    "build_sl3",
    "build_sl5a",
    "build_sl5b",
    "build_ospB",
    "build_ospD1",
    "build_ospD2",
    "parabose_ops",
    "CheckReport",
    "GradingReport",
    "check_sl_triple",
    "check_osp_triple",
    "check_parabose",
    "cc_scalar",
    "expected_lambda",
    "derive_mu_c",
    "grading_analysis",
    "superjacobi_sample",
    "PhysParams",
    "AssignedOperators",
    "assign_ND",
    "build_RP",
    "build_H",
    "check_hamilton_heisenberg",
    "dagger_report",
    "params_from_scalar",
    "SolutionRecord",
    "Catalog",
    "build_record",
    "enumerate_solutions",
    "catalog_json",
]
