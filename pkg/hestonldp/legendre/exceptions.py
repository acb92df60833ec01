from hestonldp.exceptions import HestonLDPError



class EmptyInterval(HestonLDPError):
    """Raised when an infimum is requested over an empty test set."""
    def __init__(self, interval: object) -> None:
        self.interval = interval

    def __str__(self) -> str:
        return "Cannot take the infimum of the rate function over the empty set {}.".format(self.interval)
