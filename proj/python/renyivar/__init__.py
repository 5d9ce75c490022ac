"""Renyi divergences, their variational characterizations and Markov rates."""

from ._renyivar import (
    ConvergenceFailure,
    DimensionMismatch,
    Error,
    IndeterminateForm,
    Infeasible,
    InvalidArgument,
    __version__,
    acd_inf,
    acd_sup,
    certify_inequality,
    certify_markov_inequality,
    dv_solve,
    growth_rate,
    growth_rate_bruteforce,
    log_exp_integral,
    markov_acd_inf,
    markov_acd_sup,
    rel_entropy,
    rel_entropy_rate,
    renyi_div,
    renyi_rate,
    solve_markov_variational,
    solve_variational,
    varadhan_growth,
    varadhan_solve,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
