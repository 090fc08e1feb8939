"""Generalized-Niho cyclic codes over GF(q): construction, closed-form and
exhaustive weight distributions."""
from .distribution import WeightDistribution, format_enumerator, parse_enumerator
from .enumerator import (DEFAULT_BUDGET, BudgetExceeded, NihoCode, VerificationError)
from .fields import Elem, FieldTower, UnitCircle, build_tower
from .params import (CodeSpec, ConditionReport, ConsistencyError, DerivedParams,
                     InadmissibleParameters, check_conditions, derive, dimension,
                     minpoly_degree, same_minpoly)
from .theory import (N_k, corollary_tables, griesmer_bound, griesmer_check, moment_system,
                     solve_distribution, theoretical_weights)

__all__ = [
    "BudgetExceeded", "CodeSpec", "ConditionReport", "ConsistencyError", "DEFAULT_BUDGET",
    "DerivedParams", "Elem", "FieldTower", "InadmissibleParameters", "N_k", "NihoCode",
    "UnitCircle", "VerificationError", "WeightDistribution", "build_tower", "check_conditions",
    "corollary_tables", "derive", "dimension", "format_enumerator", "griesmer_bound",
    "griesmer_check", "minpoly_degree", "moment_system", "parse_enumerator", "same_minpoly",
    "solve_distribution", "theoretical_weights",
]
