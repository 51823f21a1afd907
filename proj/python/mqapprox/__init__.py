"""Approximation of continuous functions on an interval by linear
combinations of scattered translates of the generalized multiquadric
phi_k(t) = (t^2 + c^2)^(k - 1/2).

Exact rational inputs may be passed as ``fractions.Fraction``, ``int``,
``float`` (converted exactly as a dyadic), or a ``"p/q"`` string; exact
outputs come back as ``fractions.Fraction``.
"""

from ._core import (
    Approximant,
    ApproxResult,
    CapExceeded,
    ExpressionEvalError,
    ExpressionParseError,
    SequenceExhausted,
    approximate,
    convergence_threshold,
    evaluate_expression,
    expansion_coefficient,
    expansion_polynomial,
    multiquadric,
    normalized_weights,
    recover_polynomial,
    solve_weights,
    sup_error,
    truncated_expansion,
)

__all__ = [
    "Approximant",
    "ApproxResult",
    "CapExceeded",
    "ExpressionEvalError",
    "ExpressionParseError",
    "SequenceExhausted",
    "approximate",
    "convergence_threshold",
    "evaluate_expression",
    "expansion_coefficient",
    "expansion_polynomial",
    "multiquadric",
    "normalized_weights",
    "recover_polynomial",
    "solve_weights",
    "sup_error",
    "truncated_expansion",
]

__version__ = "0.1.0"
