"""Exact invariants of function germs on isolated hypersurface singularities.

A small computer-algebra kernel (local-order standard bases via Mora
division, syzygies, ideal quotients) plus the singularity invariants built
from it: Milnor, Tjurina and Bruce-Roberts numbers, with every identity
relating them verified exactly on each input.
"""

from .errors import (
    BrsError,
    BudgetError,
    ContainmentError,
    ContextError,
    GermError,
    InternalError,
    ParseError,
)
from .polycore import (
    LocalOrder,
    ModuleOrder,
    Monomial,
    NEGDEGREVLEX,
    POT,
    Polynomial,
    TOP,
    VarContext,
    VectorField,
    compare,
    jacobian_ideal,
    minors_2x2,
)
from .stdbasis import (
    DEFAULT_BUDGET,
    Ideal,
    NOT_FINITE,
    NotFiniteType,
    StandardBasis,
    Submodule,
    colength,
    ideal_colon,
    ideal_contains,
    ideal_intersection,
    ideal_product,
    ideals_equal,
    is_finite,
    membership,
    module_quotient_dim,
    mora_normal_form,
    standard_basis,
    standard_monomials,
    syzygies,
)
from .oracle import (
    INCONCLUSIVE,
    InconclusiveType,
    JetTruncation,
    jet_contains,
    jet_quotient_dim,
    oracle_colength,
)
from .tangent import (
    DerivationModule,
    HypersurfaceProblem,
    df_ideal,
    df_pair,
    df_trivial_ideal,
    suspend,
    theta_contains,
    theta_full,
    theta_trivial,
)
from .invariants import (
    InvariantReport,
    LedgerEntry,
    analyze,
    bruce_roberts,
    detect_split,
    fiber_milnor,
    milnor,
    relative_bruce_roberts,
    tjurina,
    verify_identities,
)
from .parsing import ParsedProblem, ProblemFile, parse_poly, parse_problem

__version__ = "0.1.0"

__all__ = [
    "BrsError",
    "BudgetError",
    "ContainmentError",
    "ContextError",
    "GermError",
    "InternalError",
    "ParseError",
    "LocalOrder",
    "ModuleOrder",
    "Monomial",
    "NEGDEGREVLEX",
    "POT",
    "TOP",
    "Polynomial",
    "VarContext",
    "VectorField",
    "compare",
    "jacobian_ideal",
    "minors_2x2",
    "DEFAULT_BUDGET",
    "Ideal",
    "NOT_FINITE",
    "NotFiniteType",
    "StandardBasis",
    "Submodule",
    "colength",
    "ideal_colon",
    "ideal_contains",
    "ideal_intersection",
    "ideal_product",
    "ideals_equal",
    "is_finite",
    "membership",
    "module_quotient_dim",
    "mora_normal_form",
    "standard_basis",
    "standard_monomials",
    "syzygies",
    "INCONCLUSIVE",
    "InconclusiveType",
    "JetTruncation",
    "jet_contains",
    "jet_quotient_dim",
    "oracle_colength",
    "DerivationModule",
    "HypersurfaceProblem",
    "df_ideal",
    "df_pair",
    "df_trivial_ideal",
    "suspend",
    "theta_contains",
    "theta_full",
    "theta_trivial",
    "InvariantReport",
    "LedgerEntry",
    "analyze",
    "bruce_roberts",
    "detect_split",
    "fiber_milnor",
    "milnor",
    "relative_bruce_roberts",
    "tjurina",
    "verify_identities",
    "ParsedProblem",
    "ProblemFile",
    "parse_poly",
    "parse_problem",
]
