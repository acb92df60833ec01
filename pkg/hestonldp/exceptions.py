class HestonLDPError(Exception):
    """Base exception for all hestonldp errors."""


class ConfigurationError(HestonLDPError):
    """Raised when a run configuration cannot be resolved."""
    def __init__(self, message: str) -> None:
        self.message = message

    def __str__(self) -> str:
        return self.message
