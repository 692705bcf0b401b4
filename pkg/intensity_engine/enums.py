from enum import Enum


class Algorithm(str, Enum):
    """community detection algorithm"""

    ci = "ci"
    ciia = "ciia"
    louvain = "louvain"


class Mode(str, Enum):
    """cli subcommand"""

    detect = "detect"
    generate = "gen"
    bench = "bench"
    selftest = "selftest"


class GeneratorFamily(str, Enum):
    """synthetic graph family"""

    ba = "ba"
    planted = "planted"


class StopRule(str, Enum):
    """what the merge walk does with a negative modularity gain"""

    skip_negative = "skip_negative"
    halt_on_negative = "halt_on_negative"


class ZeroGainRule(str, Enum):
    """what the merge walk does with an exactly zero modularity gain"""

    skip = "skip"
    accept = "accept"
    halt = "halt"


class TieBreak(str, Enum):
    """ordering of edges with equal connect intensity"""

    lexicographic = "lexicographic"
    random = "random"


class IsolatedNodeRule(str, Enum):
    """how an edge with exactly one singleton endpoint is merged"""

    edge = "edge"
    best_neighbor = "best_neighbor"
