"""Fractional field solutions: Mittag-Leffler, Wright and Fox H functions, grid solver."""

import json

from ._core import (
    DomainError,
    FracfieldError,
    NoClosedForm,
    NoSeriesForm,
    NumericError,
    OutOfRegime,
    ValidityError,
    ml,
    wright,
)
from . import _core

__all__ = [
    "DomainError", "FracfieldError", "NoClosedForm", "NoSeriesForm", "NumericError",
    "OutOfRegime", "ValidityError", "foxh", "ml", "ml_as_h", "solve", "verify", "wright",
]


def ml_as_h(alpha, beta):
    return json.loads(_core.ml_as_h_json(alpha, beta))


def foxh(spec, x):
    """Full H-function value (prefactor and argument map applied) at x."""
    return _core.foxh(json.dumps(spec), complex(x))


def solve(problem, grid, method="auto", regularize=False, threads=0):
    """Rows (x, y, N, imag_residual, method, error_flag); y outer, x inner."""
    return _core.solve_grid(json.dumps(problem), json.dumps(grid), method, regularize, threads)


def verify(suite, seed=None):
    if seed is None:
        return json.loads(_core.verify(suite))
    return json.loads(_core.verify(suite, seed))
