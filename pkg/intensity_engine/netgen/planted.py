import logging
from typing import List, Tuple

import numpy as np

from ..arguments import PlantedConfig
from ..errors import InfeasibleParametersError
from ..graph import Graph, Partition
from ..utils import log_message


def planted_params(n: int, groups: int, avg_degree: float, ratio: float) -> Tuple[float, float]:
    """edge probabilities for equal groups with a target mean degree and p_in = ratio * p_out

    Solves (n / groups - 1) * p_in + (n - n / groups) * p_out = avg_degree.

    Args:
        n (int): number of nodes
        groups (int): number of groups, must divide `n`
        avg_degree (float): expected mean degree
        ratio (float): p_in / p_out, at least 1

    Raises:
        InfeasibleParametersError: if the groups don't divide `n` or the solution is not a probability

    Returns:
        Tuple[float, float]: p_in, p_out
    """

    if groups < 1 or n % groups != 0:
        raise InfeasibleParametersError(f"groups ({groups}) should divide n ({n})")
    if ratio < 1:
        raise InfeasibleParametersError(f"ratio ({ratio}) should be at least 1")
    if avg_degree < 0:
        raise InfeasibleParametersError(f"avg_degree ({avg_degree}) should be non-negative")

    group_size = n // groups
    denominator = (group_size - 1) * ratio + (n - group_size)
    if denominator == 0:
        if avg_degree == 0:
            return 0.0, 0.0
        raise InfeasibleParametersError(f"a graph with n = {n} can't reach avg_degree ({avg_degree})")

    p_out = avg_degree / denominator
    p_in = ratio * p_out

    if p_in > 1:
        raise InfeasibleParametersError(f"p_in ({p_in}) exceeds 1, lower avg_degree or ratio")

    return p_in, p_out


def gen_planted(config: PlantedConfig) -> Tuple[Graph, Partition]:
    """planted partition graph, every pair inside a group is an edge with p_in and across groups with p_out

    Nodes are labelled 0..n-1 group by group. Isolated nodes are kept in the graph.

    Args:
        config (PlantedConfig): group sizes, probabilities and seed

    Returns:
        Tuple[Graph, Partition]: graph and the planted ground truth
    """

    rng = np.random.default_rng(config.seed)

    offsets = np.cumsum([0] + list(config.sizes))
    edges: List[Tuple[int, int]] = []

    for a, size_a in enumerate(config.sizes):
        for b in range(a, len(config.sizes)):
            size_b = config.sizes[b]

            if a == b:
                hits = np.triu(rng.random((size_a, size_a)) < config.p_in, k=1)
            else:
                hits = rng.random((size_a, size_b)) < config.p_out

            rows, columns = np.nonzero(hits)
            edges.extend(zip((rows + offsets[a]).tolist(), (columns + offsets[b]).tolist()))

    edges.sort()

    labels = [str(node) for node in range(config.n)]
    graph = Graph(labels, edges)

    assignment = [group for group, size in enumerate(config.sizes) for _ in range(size)]
    partition = Partition.from_assignment(graph, assignment)

    log_message(
        logging.DEBUG,
        f"generated planted graph with n = {graph.n}, m = {graph.m}, {len(config.sizes)} groups",
    )
    return graph, partition
