from hestonldp.exceptions import HestonLDPError



class CgfError(HestonLDPError):
    """Base exception for cumulant generating function errors."""


class OutsideDomainInterior(CgfError):
    """Raised when a derivative is requested off the interior of the effective
    domain.
    """
    def __init__(self, u: float, domain: object) -> None:
        self.u = u
        self.domain = domain

    def __str__(self) -> str:
        return "u={!r} is not in the interior of the effective domain {}.".format(self.u, self.domain)


class EmptyDomain(CgfError):
    """Raised when a combinator leaves an empty effective domain."""
    def __init__(self, detail: str) -> None:
        self.detail = detail

    def __str__(self) -> str:
        return "Effective domain is empty: {}".format(self.detail)


class CompositionOrderError(CgfError):
    """Raised when a tilt is applied on top of a truncation.

    Perturbations act under a fixed measure, so the canonical order is
    tilt first, then perturb.
    """
    def __str__(self) -> str:
        return "Cannot tilt a truncated cgf; apply the tilt before the perturbation."
