import logging
from typing import Callable, Dict, List

from .graph import Graph, parse_edgelist
from .utils import is_networkx_available, log_message


# Padgett's Florentine families marriage network, families numbered 1..15
FLORENTINE_EDGELIST = """\
# nodes=15 edges=20
7 8
6 7
14 7
6 8
14 8
13 5
12 15
10 11
1 2
2 4
3 4
2 5
10 12
9 6
2 3
12 2
9 2
10 4
14 10
3 8
"""

# ten node worked example with three communities
EXAMPLE2_EDGELIST = """\
# nodes=10 edges=16
5 6
0 8
6 9
0 1
1 8
4 7
1 2
0 7
3 4
5 9
3 7
7 8
3 5
1 9
8 9
1 4
"""


def _load_florentine() -> Graph:
    return parse_edgelist(FLORENTINE_EDGELIST)


def _load_example2() -> Graph:
    return parse_edgelist(EXAMPLE2_EDGELIST)


def _load_lesmis() -> Graph:
    """Knuth's Les Misérables co-appearance network as shipped with networkx, edge weights dropped"""

    assert is_networkx_available(), "pip package networkx is needed for the lesmis dataset"
    import networkx as nx

    def _label(name: str) -> str:
        return "_".join(str(name).split())

    nx_graph = nx.les_miserables_graph()
    return Graph.from_labeled_edges(
        ((_label(u), _label(v)) for u, v in nx_graph.edges()), nodes=(_label(node) for node in nx_graph.nodes())
    )


_DATASETS: Dict[str, Callable[[], Graph]] = {
    "florentine": _load_florentine,
    "example2": _load_example2,
    "lesmis": _load_lesmis,
}


def list_datasets() -> List[str]:
    return sorted(_DATASETS)


def load_dataset(name: str) -> Graph:
    if name not in _DATASETS:
        raise ValueError(f"unexpected dataset ({name}), expected one of {list_datasets()}")

    graph = _DATASETS[name]()
    log_message(logging.DEBUG, f"loaded dataset {name} with n = {graph.n}, m = {graph.m}")
    return graph
