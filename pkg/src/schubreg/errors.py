"""Exception types shared across the package."""


class CapExceeded(ValueError):
    """An operation was asked to enumerate beyond its configured size cap."""

    def __init__(self, what: str, n: int, cap: int):
        super().__init__(f"{what}: n={n} exceeds cap {cap}")
        self.what = what
        self.n = n
        self.cap = cap


class EmptyInterval(ValueError):
    """The lower end of a requested interval is not below the upper end."""


class ParseError(ValueError):
    """Malformed text input; ``position`` is the 0-based offending offset."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position
