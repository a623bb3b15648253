"""Exact workbench for first-order differential calculi on free
associative algebras: commutation rules, twisted partial derivatives,
optimal-ideal filtrations, consistency checks, and the two-generator
classification of regular commutative calculi."""

from .calculus import (OneForm, VectorField, differential, left_mul_form,
                       pairing, partial, vf_apply, vf_right_action,
                       word_partials)
from .classify2 import (ConditionReport, FamilyParams, build_family,
                        commutator_in_I2, commutes_mod_commutative,
                        match_family, necessary_conditions)
from .commrule import (BUILTIN_NAMES, CommRule, MatrixPoly,
                       NonHomogeneousRuleError, builtin,
                       substitute_generators)
from .fields import GF, QQ, FpElement, field_from_name, is_prime
from .freealg import (FreeAlgebra, NCPoly, all_words, default_names,
                      format_poly, index_word, word_index)
from .linalg import Subspace, invert_matrix, nullspace, preimage, rref
from .optimal import (ConsistencyReport, IdealFiltration,
                      IdealPropertyViolation, Violation,
                      check_consistent_ideal, check_same_degree_consistency,
                      compute_U, ideal_component, is_regular,
                      largest_invariant, optimal_ideal, quotient_dims)
from .parsing import ExprSyntaxError, parse_expr
from .rulefile import (RuleDocument, RuleFileError, load_rule,
                       parse_rule_dict, rule_to_dict, save_rule)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_NAMES", "CommRule", "ConditionReport", "ConsistencyReport",
    "ExprSyntaxError", "FamilyParams", "FpElement", "FreeAlgebra", "GF",
    "IdealFiltration", "IdealPropertyViolation", "MatrixPoly", "NCPoly",
    "NonHomogeneousRuleError", "OneForm", "QQ", "RuleDocument",
    "RuleFileError", "Subspace", "VectorField", "Violation", "all_words",
    "build_family", "builtin", "check_consistent_ideal",
    "check_same_degree_consistency", "commutator_in_I2",
    "commutes_mod_commutative", "compute_U", "default_names",
    "differential", "field_from_name", "format_poly", "ideal_component",
    "index_word", "invert_matrix", "is_prime", "is_regular",
    "largest_invariant", "left_mul_form", "load_rule", "match_family",
    "necessary_conditions", "nullspace", "optimal_ideal", "pairing",
    "parse_expr", "parse_rule_dict", "partial", "preimage",
    "quotient_dims", "rref", "rule_to_dict", "save_rule",
    "substitute_generators", "vf_apply", "vf_right_action", "word_index",
    "word_partials",
]
