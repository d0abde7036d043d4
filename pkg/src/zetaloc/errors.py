"""Exception types shared by the parsers and the zeta engines."""


class ParseError(ValueError):
    """Malformed textual input; ``position`` is the 0-based offset of the problem."""

    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}")


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


class DegenerateInputError(PreconditionError):
    """Lattice data that violates an integrality assumption of the face combinatorics."""
