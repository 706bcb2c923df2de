"""Error types shared across frlab modules."""


class ResourceLimitError(RuntimeError):
    """A transform grid would exceed the configured memory budget.

    Carries the estimated allocation so callers (and the CLI, exit code 3)
    can report exactly how many bytes the request needed.
    """

    def __init__(self, required_bytes: int, limit_bytes: int, context: str = ""):
        self.required_bytes = int(required_bytes)
        self.limit_bytes = int(limit_bytes)
        msg = (f"grid needs {self.required_bytes} bytes but the budget is "
               f"{self.limit_bytes} bytes")
        if context:
            msg = f"{context}: {msg}"
        super().__init__(msg)


class ParsevalError(RuntimeError):
    """Grid quadrature disagrees with coefficient-space power (internal numeric failure)."""
