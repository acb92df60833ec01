from hestonldp.exceptions import HestonLDPError



class ParameterError(HestonLDPError):
    """Base exception for invalid Heston parameter sets."""


class NonPositiveParameter(ParameterError):
    """Raised when a parameter that must be strictly positive is not."""
    def __init__(self, name: str, value: float) -> None:
        self.name = name
        self.value = value

    def __str__(self) -> str:
        return "Parameter '{}' must be strictly positive, got {!r}.".format(self.name, self.value)


class CorrelationOutOfRange(ParameterError):
    """Raised when the correlation is not strictly inside (-1, 1)."""
    def __init__(self, rho: float) -> None:
        self.rho = rho

    def __str__(self) -> str:
        return "Correlation 'rho' must lie strictly inside (-1, 1), got {!r}.".format(self.rho)


class StandingAssumptionViolated(ParameterError):
    """Raised when rho*sigma - kappa < 0 does not hold."""
    def __init__(self, kappa: float, sigma: float, rho: float) -> None:
        self.kappa = kappa
        self.sigma = sigma
        self.rho = rho

    def __str__(self) -> str:
        return (
            "Standing assumption rho*sigma - kappa < 0 violated: "
            "{!r}*{!r} - {!r} = {!r}.".format(
                self.rho, self.sigma, self.kappa, self.rho * self.sigma - self.kappa
            )
        )
