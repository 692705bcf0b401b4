import logging
from typing import List, Set

import numpy as np

from ..arguments import BAConfig
from ..graph import Graph
from ..utils import log_message


def gen_ba(config: BAConfig) -> Graph:
    """Barabási–Albert preferential attachment graph with nodes labelled 0..n-1

    Growth starts from node 0. Node 1 attaches to it, every later node t draws targets with replacement from the list
    of edge endpoints, so proportionally to degree, until it has min(m_attach, t) distinct ones. The generator is
    numpy's PCG64 seeded with `config.seed`.

    Args:
        config (BAConfig): node count, edges per new node and seed

    Returns:
        Graph: the generated graph
    """

    rng = np.random.default_rng(config.seed)

    edges = [(1, 0)]
    # every node appears once per incident edge
    endpoints: List[int] = [1, 0]

    for node in range(2, config.n):
        wanted = min(config.m_attach, node)
        targets: Set[int] = set()

        while len(targets) < wanted:
            targets.add(endpoints[int(rng.integers(len(endpoints)))])

        for target in sorted(targets):
            edges.append((node, target))
            endpoints.extend((node, target))

    labels = [str(node) for node in range(config.n)]
    graph = Graph(labels, edges)

    log_message(logging.DEBUG, f"generated ba graph with n = {graph.n}, m = {graph.m}")
    return graph
