class InputError(ValueError):
    """Malformed input handed to an operation (range, ground-set mismatch, unknown name)."""


class ParseError(InputError):
    def __init__(self, message: str, lineno: int, kind: str = "syntax") -> None:
        assert kind in ("syntax", "range", "duplicate"), f"Unknown parse error kind {kind}"
        super().__init__(f"line {lineno}: {kind} error: {message}")
        self.lineno = lineno
        self.kind = kind


class CapacityError(RuntimeError):
    """Exhaustive work would exceed a configured bound."""
