import logging
from typing import Dict, List, Optional, Tuple

from ..defaults import DEFAULT_MAX_ITERATIONS
from ..graph import Graph
from ..utils import log_message
from .circle import circle
from .scores import EdgeScore, ci_all, score_circles, sort_scores


class WeightMap:
    """directed weights w_{u->i} on adjacent ordered pairs, a node's weight towards itself is 1"""

    def __init__(self, graph: Graph, weights: Dict[Tuple[int, int], float], round_index: int = 0) -> None:
        self.graph = graph
        self.weights = weights
        self.round_index = round_index

    @classmethod
    def uniform(cls, graph: Graph, value: float = 1.0) -> "WeightMap":
        weights = {}
        for i, j in graph.edges:
            weights[(i, j)] = value
            weights[(j, i)] = value

        return cls(graph, weights)

    def weight(self, u: int, i: int) -> float:
        if u == i:
            return 1.0
        return self.weights.get((u, i), 0.0)

    def row_sum(self, u: int) -> float:
        return sum(self.weights.get((u, v), 0.0) for v in self.graph.adjacency[u])


def weights_from_scores(graph: Graph, scores: List[EdgeScore], round_index: int = 0) -> WeightMap:
    """clips scores at 0 and normalizes them per node, w_{u->i} = CI+_{ui} / sum_v CI+_{uv}

    A node whose scores are all clipped keeps zero weight towards every neighbour.

    Args:
        graph (Graph): the graph
        scores (List[EdgeScore]): one score per edge
        round_index (int, optional): round the weights feed. Defaults to 0.

    Returns:
        WeightMap: weights
    """

    clipped: Dict[Tuple[int, int], float] = {}
    for score in scores:
        clipped[score.edge_ids()] = max(score.ci, 0.0)

    assert len(clipped) == graph.m, "scores should cover every edge of the graph"

    weights = {}
    for u in range(graph.n):
        row = {v: clipped[(u, v) if u < v else (v, u)] for v in graph.adjacency[u]}
        total = sum(row.values())

        for v, value in row.items():
            weights[(u, v)] = value / total if total > 0 else 0.0

    return WeightMap(graph, weights, round_index=round_index)


def _weighted_circle(graph: Graph, weights: WeightMap, i: int, j: int) -> Dict[int, float]:
    result = {}
    for u in circle(graph, i, j).members:
        w = weights.weight(u, i)
        if w > 0:
            result[u] = w

    return result


def weighted_ci_edge(graph: Graph, weights: WeightMap, i: int, j: int) -> EdgeScore:
    """connect intensity of (i, j) with circle members weighted towards their anchor

    Zero weight members drop out of all four components, the overlap of the circles only holds members that are
    weighted towards both anchors.

    Args:
        graph (Graph): the graph
        weights (WeightMap): weights from the previous round
        i (int): first endpoint
        j (int): second endpoint

    Raises:
        NotAnEdgeError: if i and j are not adjacent

    Returns:
        EdgeScore: weighted score
    """

    a = _weighted_circle(graph, weights, i, j)
    b = _weighted_circle(graph, weights, j, i)
    return EdgeScore(i, j, *score_circles(graph, a, b))


def weighted_ci_all(graph: Graph, weights: WeightMap) -> List[EdgeScore]:
    return sort_scores(graph, [weighted_ci_edge(graph, weights, i, j) for i, j in graph.edges])


class IterationTrace:
    """sorted scores and sign vectors of every round, round 0 is the unweighted scoring"""

    def __init__(self, max_iterations: int) -> None:
        self.max_iterations = max_iterations
        self.rounds: List[List[EdgeScore]] = []
        self.signs: List[Tuple[int, ...]] = []
        self.orders: List[Tuple[Tuple[int, int], ...]] = []
        self.converged_round: Optional[int] = None

    def add_round(self, graph: Graph, scores: List[EdgeScore]) -> None:
        by_edge = {score.edge_ids(): score for score in scores}

        self.rounds.append(scores)
        self.signs.append(tuple(by_edge[(min(i, j), max(i, j))].sign for i, j in graph.edges))
        self.orders.append(tuple(score.edge_ids() for score in scores))

    def is_stable(self) -> bool:
        """whether the last two rounds share the sign vector and the descending edge order"""

        return len(self.rounds) >= 2 and self.signs[-1] == self.signs[-2] and self.orders[-1] == self.orders[-2]

    @property
    def converged(self) -> bool:
        return self.converged_round is not None

    @property
    def num_rounds(self) -> int:
        return len(self.rounds)

    @property
    def num_iterations(self) -> int:
        """reweighting rounds performed after the unweighted round"""

        return len(self.rounds) - 1

    def round_values(self, graph: Graph, round_index: int) -> Dict[Tuple[str, str], float]:
        return {graph.edge_key(score.i, score.j): score.ci for score in self.rounds[round_index]}


def iterate_to_fixpoint(
    graph: Graph, max_iterations: int = DEFAULT_MAX_ITERATIONS
) -> Tuple[List[EdgeScore], IterationTrace]:
    """alternates reweighting and weighted scoring until the edge order and signs stop changing

    Args:
        graph (Graph): the graph
        max_iterations (int, optional): cap on the number of rounds, round 0 included. Defaults to
            DEFAULT_MAX_ITERATIONS.

    Returns:
        Tuple[List[EdgeScore], IterationTrace]: scores of the last round and the trace
    """

    assert graph.m >= 1, "connect intensity needs at least one edge"
    assert max_iterations >= 1, "max_iterations should be at least 1"

    trace = IterationTrace(max_iterations)
    scores = ci_all(graph)
    trace.add_round(graph, scores)

    while trace.num_rounds < max_iterations:
        weights = weights_from_scores(graph, scores, round_index=trace.num_rounds)
        scores = weighted_ci_all(graph, weights)
        trace.add_round(graph, scores)

        log_message(
            logging.DEBUG,
            f"round {trace.num_rounds - 1}: top edge {graph.edge_key(scores[0].i, scores[0].j)} "
            f"ci = {scores[0].ci:.6f}",
        )

        if trace.is_stable():
            trace.converged_round = trace.num_rounds - 1
            break

    if trace.converged:
        log_message(logging.INFO, f"connect intensity converged after {trace.converged_round} rounds")
    else:
        log_message(logging.INFO, f"connect intensity did not converge in {max_iterations} rounds")

    return scores, trace
