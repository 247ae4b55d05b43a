"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class DecodeError(ValueError):
    """The input is not a correctable channel output for the given code."""


class EnumerationLimitError(RuntimeError):
    """An exhaustive enumeration would exceed the configured size cap."""

    def __init__(self, message: str, estimate: int, limit: int):
        super().__init__(f"{message} (estimated {estimate} words, limit {limit})")
        self.estimate = estimate
        self.limit = limit
