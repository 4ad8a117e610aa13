"""Componentwise L2 boosting for high-dimensional linear models."""

from ._core import (
    NumericalError,
    ValidationError,
    __version__,
    draw_dataset,
    fit_boost,
    lasso,
    lasso_cv,
    ols,
    ridge,
    rng_algorithm,
    solve_kappa,
    temlyakov_bound,
    verify_bound,
)

__all__ = [
    "NumericalError",
    "ValidationError",
    "__version__",
    "draw_dataset",
    "fit_boost",
    "lasso",
    "lasso_cv",
    "ols",
    "ridge",
    "rng_algorithm",
    "solve_kappa",
    "temlyakov_bound",
    "verify_bound",
]
