"""Exact minimal exit weight of finite strongly connected vertex sets on
shift-invariant weighted digraphs over the integers, plus a
directed-edge-reinforced random walk simulator.

All exact values cross the boundary as ``"p/q"`` strings; use
:class:`fractions.Fraction` to do arithmetic on them.
"""

from kappa0._core import (
    GraphSpec,
    beta,
    estimate_visits,
    exit_vector,
    half_sums,
    is_strongly_connected,
    lower_bound,
    oracle_kappa0,
    oracle_pareto,
    path_probability_annealed,
    path_probability_derrw,
    solve_numeric,
    solve_symbolic,
    verify_examples,
)

__all__ = [
    "GraphSpec",
    "beta",
    "estimate_visits",
    "exit_vector",
    "half_sums",
    "is_strongly_connected",
    "lower_bound",
    "oracle_kappa0",
    "oracle_pareto",
    "path_probability_annealed",
    "path_probability_derrw",
    "solve_numeric",
    "solve_symbolic",
    "verify_examples",
]

__version__ = "0.1.0"
