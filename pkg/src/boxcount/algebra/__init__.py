"""Exact arithmetic: q-polynomials, s-Laurent polynomials, factored q-expressions, Q(zeta_8)."""

from .cyclo import I, ONE, SQRT2, ZERO, ZETA, Cyclo8, CycloMatrix, laplace_det
from .factored import (
    FactoredQExpr,
    eval_at_minus_one,
    expand,
    q_factorial,
    q_hyperfactorial,
    q_integer,
    staggered_factorial,
    staggered_hyperfactorial,
)
from .qpoly import QPoly, SLaurent

__all__ = [
    "QPoly",
    "SLaurent",
    "FactoredQExpr",
    "q_integer",
    "q_factorial",
    "q_hyperfactorial",
    "staggered_hyperfactorial",
    "staggered_factorial",
    "expand",
    "eval_at_minus_one",
    "Cyclo8",
    "CycloMatrix",
    "laplace_det",
    "ZETA",
    "I",
    "SQRT2",
    "ONE",
    "ZERO",
]
