from hestonldp.exceptions import HestonLDPError



class MonteCarloError(HestonLDPError):
    """Base exception for simulation errors."""


class BudgetExceeded(MonteCarloError):
    """Raised when n_paths * n_steps exceeds the configured budget."""
    def __init__(self, n_paths: int, n_steps: int, budget: int) -> None:
        self.n_paths = n_paths
        self.n_steps = n_steps
        self.budget = budget

    def __str__(self) -> str:
        return "Simulation of {} paths x {} steps exceeds the budget of {} path-steps.".format(
            self.n_paths, self.n_steps, self.budget
        )


class GateRefused(MonteCarloError):
    """Raised when a Gartner-Ellis verification is requested for a family
    whose limiting cgf is not essentially smooth and lower semicontinuous.
    """
    def __init__(self, reason: str) -> None:
        self.reason = reason

    def __str__(self) -> str:
        return "Gartner-Ellis theorem does not apply: {}".format(self.reason)


class EstimatorDomainError(MonteCarloError):
    """Raised when the empirical scaled cgf is requested too near the domain
    boundary, where finite-horizon moments explode.
    """
    def __init__(self, u: float, lo: float, hi: float) -> None:
        self.u = u
        self.lo = lo
        self.hi = hi

    def __str__(self) -> str:
        return "u={!r} must lie in ({!r}, {!r}) for the empirical scaled cgf.".format(
            self.u, self.lo, self.hi
        )
