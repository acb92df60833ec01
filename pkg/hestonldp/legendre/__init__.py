from .conjugate import (
    DEFAULT_SOLVER,
    ConjugateSolver,
    conjugate,
    ldp_bounds,
    rate,
    rate_infimum,
    rate_minimizer,
    tilted_rate
)
from .exceptions import EmptyInterval
from .models import RatePoint



__all__ = [
    "DEFAULT_SOLVER",
    "ConjugateSolver",
    "conjugate",
    "ldp_bounds",
    "rate",
    "rate_infimum",
    "rate_minimizer",
    "tilted_rate",
    "EmptyInterval",
    "RatePoint",
]
