"""Branching-time chance logic with exact rational arithmetic.

Formulas mix temporal operators with polynomial probability comparisons;
models are finite trees of world-histories carrying per-time chance
distributions. Everything is computed exactly, never with floats.
"""

from tempra._core import (
    BuildError,
    CausalReport,
    Cmp,
    EvalError,
    EventOccurrence,
    Extent,
    Fixture,
    Formula,
    FormulaKind,
    GenParams,
    Model,
    Monomial,
    ParseError,
    Rational,
    SatParams,
    SatResult,
    Schema,
    SchemaInstance,
    Violation,
    ViolationReport,
    accessible,
    all_schemas,
    alpha_grid,
    analyze_cause,
    atom_symbols,
    bounded_sat,
    check_constraints,
    check_schema,
    desugar,
    entails_in_model,
    eval_formula,
    expected_future_probability,
    fixture,
    fixtures,
    generate_model,
    is_core,
    model_to_json,
    parse_formula,
    parse_model,
    print_formula,
    probability,
    run_fixture_checks,
    sample_formula,
    sample_instances,
    schema_from_name,
    schema_name,
    time_symbols,
    time_symbols_ordered,
    valid_in_model,
)

__version__ = "0.1.0"

__all__ = [
    "BuildError",
    "CausalReport",
    "Cmp",
    "EvalError",
    "EventOccurrence",
    "Extent",
    "Fixture",
    "Formula",
    "FormulaKind",
    "GenParams",
    "Model",
    "Monomial",
    "ParseError",
    "Rational",
    "SatParams",
    "SatResult",
    "Schema",
    "SchemaInstance",
    "Violation",
    "ViolationReport",
    "accessible",
    "all_schemas",
    "alpha_grid",
    "analyze_cause",
    "atom_symbols",
    "bounded_sat",
    "check_constraints",
    "check_schema",
    "desugar",
    "entails_in_model",
    "eval_formula",
    "expected_future_probability",
    "fixture",
    "fixtures",
    "generate_model",
    "is_core",
    "model_to_json",
    "parse_formula",
    "parse_model",
    "print_formula",
    "probability",
    "run_fixture_checks",
    "sample_formula",
    "sample_instances",
    "schema_from_name",
    "schema_name",
    "time_symbols",
    "time_symbols_ordered",
    "valid_in_model",
]
