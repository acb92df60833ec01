from hestonldp.exceptions import HestonLDPError



class OutOfTheoremRange(HestonLDPError):
    """Raised when a limit is requested outside the range where it is proven."""
    def __init__(self, kind: str, x: float, admissible: object) -> None:
        self.kind = kind
        self.x = x
        self.admissible = admissible

    def __str__(self) -> str:
        return "x={!r} is outside the proven range {} of the {} limit.".format(
            self.x, self.admissible, self.kind
        )


class InvalidConfiguration(HestonLDPError):
    """Raised when a simulation setup matches none of the proven limits."""
    def __init__(self, detail: str) -> None:
        self.detail = detail

    def __str__(self) -> str:
        return self.detail
