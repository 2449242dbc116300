"""Exact continued fractions, quadratic surds and Pell's equation."""

from ._cfrac import (
    CfracError,
    PeriodicCF,
    QuadraticSurd,
    canonicalize,
    classify_monic,
    convergents,
    decimal_approx,
    evaluate,
    expand,
    expand_surd,
    format_cf,
    golden_error_bound_check,
    iterate_monic,
    iterate_simple,
    limit_simple,
    parse_cf,
    pell_fundamental,
    pell_solutions,
    periodic_to_surd,
    sqrt_cf,
)

__all__ = [
    "CfracError",
    "PeriodicCF",
    "QuadraticSurd",
    "canonicalize",
    "classify_monic",
    "convergents",
    "decimal_approx",
    "evaluate",
    "expand",
    "expand_surd",
    "format_cf",
    "golden_error_bound_check",
    "iterate_monic",
    "iterate_simple",
    "limit_simple",
    "parse_cf",
    "pell_fundamental",
    "pell_solutions",
    "periodic_to_surd",
    "sqrt_cf",
]
