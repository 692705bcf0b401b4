from typing import Optional


class EdgeListParseError(ValueError):
    """malformed edge list line, `line_number` is None for graphs built without a file"""

    def __init__(self, line_number: Optional[int], message: str) -> None:
        self.line_number = line_number
        super().__init__(message if line_number is None else f"line {line_number}: {message}")


class SelfLoopError(EdgeListParseError):
    def __init__(self, label: str, line_number: Optional[int] = None) -> None:
        super().__init__(line_number, f"self-loop on node ({label}) is not allowed")


class EmptyGraphError(ValueError):
    """graph without edges, modularity is undefined"""


class NotAnEdgeError(ValueError):
    def __init__(self, i: int, j: int) -> None:
        super().__init__(f"nodes ({i}, {j}) are not adjacent")


class InvalidMergeError(ValueError):
    """a community can't be merged with itself"""


class UnknownCommunityError(ValueError):
    def __init__(self, community: int) -> None:
        super().__init__(f"unexpected community id ({community})")


class InfeasibleParametersError(ValueError):
    """generator parameters that can't be satisfied"""
