import inspect
import os

from pydantic import BaseSettings, Field, confloat, conint

from hestonldp.cgf import SteepnessProbe
from hestonldp.legendre import ConjugateSolver
from hestonldp.montecarlo import BlockRunner
from hestonldp.util import format_docstring



_CS = inspect.signature(ConjugateSolver).parameters
_SP = inspect.signature(SteepnessProbe).parameters
_BR = inspect.signature(BlockRunner).parameters


class SolverSettings(BaseSettings):
    u_tolerance: confloat(gt=0) = Field(
        default=_CS["tolerance"].default,
        description=format_docstring("""Absolute tolerance on the maximiser of
        the Fenchel-Legendre transform. Defaults to {}""".format(_CS["tolerance"].default))
    )
    max_iterations: conint(gt=0) = Field(
        default=_CS["max_iterations"].default,
        description=format_docstring("""Iteration cap for Brent's method.
        Defaults to {}""".format(_CS["max_iterations"].default))
    )
    bracket_halvings: conint(gt=0) = Field(
        default=_CS["bracket_halvings"].default,
        description=format_docstring("""Number of geometric steps toward a
        domain endpoint while bracketing a root before the supremum is
        reported at the endpoint. Defaults to {}""".format(_CS["bracket_halvings"].default))
    )

    def get_solver(self) -> ConjugateSolver:
        return ConjugateSolver(
            tolerance=self.u_tolerance,
            max_iterations=self.max_iterations,
            bracket_halvings=self.bracket_halvings
        )

    class Config:
        env_file=".env"
        env_prefix="hestonldp_solver_"


class SmoothnessSettings(BaseSettings):
    divergence_threshold: confloat(gt=0) = Field(
        default=_SP["threshold"].default,
        description=format_docstring("""|Lambda'| above which the numeric
        derivative sequence is considered divergent. Defaults to {}""".format(_SP["threshold"].default))
    )
    first_exponent: conint(ge=1) = Field(
        default=_SP["first_exponent"].default,
        description=format_docstring("""The probe sequence starts at a distance
        of 10^-first_exponent from the endpoint. Defaults to {}""".format(_SP["first_exponent"].default))
    )
    last_exponent: conint(ge=1) = Field(
        default=_SP["last_exponent"].default,
        description=format_docstring("""The probe sequence ends at a distance of
        10^-last_exponent from the endpoint. Defaults to {}""".format(_SP["last_exponent"].default))
    )
    trailing_terms: conint(ge=1) = Field(
        default=_SP["trailing"].default,
        description=format_docstring("""Number of final probe terms that must
        exceed the threshold. Defaults to {}""".format(_SP["trailing"].default))
    )

    def get_probe(self) -> SteepnessProbe:
        return SteepnessProbe(
            threshold=self.divergence_threshold,
            first_exponent=self.first_exponent,
            last_exponent=self.last_exponent,
            trailing=self.trailing_terms
        )

    class Config:
        env_file=".env"
        env_prefix="hestonldp_smoothness_"


class MonteCarloSettings(BaseSettings):
    budget: conint(gt=0) = Field(
        default=10**9,
        description=format_docstring("""Maximum number of path-steps
        (n_paths * n_steps) of a single simulation. Defaults to 10^9""")
    )
    block_size: conint(gt=0) = Field(
        default=_BR["block_size"].default,
        description=format_docstring("""Number of paths per random stream
        block. Changing this changes the simulated sample. Defaults to {}
        """.format(_BR["block_size"].default))
    )
    max_workers: conint(gt=0, le=64) = Field(
        default=min(8, os.cpu_count() or 1),
        description=format_docstring("""Number of threads simulating blocks.
        Results do not depend on this value. Defaults to the number of CPUs,
        at most 8""")
    )
    z_score: confloat(gt=0) = Field(
        default=1.96,
        description=format_docstring("""Normal quantile of reported confidence
        intervals. Defaults to 1.96""")
    )
    steps_per_unit_time: conint(ge=10) = Field(
        default=20,
        description=format_docstring("""Euler steps per unit of time. Defaults
        to 20""")
    )

    def get_runner(self, max_workers: int | None = None) -> BlockRunner:
        return BlockRunner(
            block_size=self.block_size,
            max_workers=max_workers or self.max_workers
        )

    class Config:
        env_file=".env"
        env_prefix="hestonldp_mc_"


SOLVER_SETTINGS = SolverSettings()
SMOOTHNESS_SETTINGS = SmoothnessSettings()
MONTECARLO_SETTINGS = MonteCarloSettings()
