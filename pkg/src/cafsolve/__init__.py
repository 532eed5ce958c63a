"""Controllability solver for argumentation frameworks with control and
uncertainty: data model, extension semantics, completion enumeration, an
exhaustive decision procedure with witnesses, and a SAT/QBF route for
possible controllability under stable semantics."""

from .completion import (
    CompletionChoice,
    Orientation,
    count_completions,
    enumerate_completions,
    iter_completion_choices,
    materialize,
)
from .controllability import (
    DEFAULT_BUDGET,
    SearchStats,
    Verdict,
    decide,
    decide_possible_acceptance_iaf,
)
from .encoding import (
    caf_stable_formula,
    controllability_formula,
    emit_dimacs,
    emit_qdimacs,
    enumerate_models,
    parse_dimacs,
    parse_qdimacs,
    solve_credulous,
    solve_skeptical,
    stable_acceptance_formula,
    stable_extensions_by_sat,
    stable_extensions_formula,
)
from .errors import (
    BudgetExceededError,
    CafError,
    DomainError,
    InvariantViolation,
    ParseError,
)
from .formula import CnfFormula, Formula, QuantifiedFormula, VarId, evaluate, to_cnf
from .instance import (
    Instance,
    parse_af,
    parse_instance,
    serialize_af,
    serialize_caf,
)
from .model import (
    Acceptance,
    ArgumentationFramework,
    Configuration,
    ControlAF,
    IncompleteAF,
    Mode,
    Query,
    Semantics,
    Witness,
    configure,
    is_completion_of,
    reduce_iaf,
    validate_target,
)
from .semantics import (
    accepted,
    extensions,
    grounded_extension,
    is_admissible,
    is_conflict_free,
)

__version__ = "0.1.0"

__all__ = [
    "Acceptance",
    "ArgumentationFramework",
    "BudgetExceededError",
    "CafError",
    "CnfFormula",
    "CompletionChoice",
    "Configuration",
    "ControlAF",
    "DEFAULT_BUDGET",
    "DomainError",
    "Formula",
    "IncompleteAF",
    "Instance",
    "InvariantViolation",
    "Mode",
    "Orientation",
    "ParseError",
    "QuantifiedFormula",
    "Query",
    "SearchStats",
    "Semantics",
    "VarId",
    "Verdict",
    "Witness",
    "accepted",
    "caf_stable_formula",
    "configure",
    "controllability_formula",
    "count_completions",
    "decide",
    "decide_possible_acceptance_iaf",
    "emit_dimacs",
    "emit_qdimacs",
    "enumerate_completions",
    "enumerate_models",
    "evaluate",
    "extensions",
    "grounded_extension",
    "is_admissible",
    "is_completion_of",
    "is_conflict_free",
    "iter_completion_choices",
    "materialize",
    "parse_af",
    "parse_dimacs",
    "parse_instance",
    "parse_qdimacs",
    "reduce_iaf",
    "serialize_af",
    "serialize_caf",
    "solve_credulous",
    "solve_skeptical",
    "stable_acceptance_formula",
    "stable_extensions_by_sat",
    "stable_extensions_formula",
    "to_cnf",
    "validate_target",
]
