import logging
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .arguments import LouvainConfig
from .enums import Algorithm
from .errors import EmptyGraphError
from .graph import Graph, Partition, modularity
from .report import AlgoReport
from .utils import Timer, log_message


class WorkingGraph:
    """weighted undirected graph with self-loops, the state Louvain aggregates level by level

    A self-loop stores twice the weight of the edges folded into the node, so node strengths always add up to 2m.
    """

    def __init__(self, adjacency: List[Dict[int, float]], self_loops: List[float]) -> None:
        assert len(adjacency) == len(self_loops)

        self.adjacency = adjacency
        self.self_loops = self_loops
        self.n = len(adjacency)
        self.strengths = [sum(neighbors.values()) + loop for neighbors, loop in zip(adjacency, self_loops)]
        self.total_weight = sum(self.strengths)

    @classmethod
    def from_graph(cls, graph: Graph) -> "WorkingGraph":
        adjacency = [{neighbor: 1.0 for neighbor in graph.neighbors(node)} for node in range(graph.n)]
        return cls(adjacency, [0.0] * graph.n)

    def modularity(self, assignment: Sequence[int]) -> float:
        if self.total_weight == 0:
            raise EmptyGraphError("modularity is undefined for a graph without edges")

        internal: Dict[int, float] = {}
        total: Dict[int, float] = {}

        for node in range(self.n):
            community = assignment[node]
            total[community] = total.get(community, 0) + self.strengths[node]

            weight = self.self_loops[node]
            for neighbor, w in self.adjacency[node].items():
                if assignment[neighbor] == community:
                    weight += w
            internal[community] = internal.get(community, 0) + weight

        two_m = self.total_weight
        return sum(internal[c] / two_m - (total[c] / two_m) ** 2 for c in total)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(n={self.n}, total_weight={self.total_weight})"


def _compact(assignment: Sequence[int]) -> List[int]:
    # community ids become 0..k-1 in order of first appearance
    mapping: Dict[int, int] = {}
    return [mapping.setdefault(community, len(mapping)) for community in assignment]


def local_move_pass(
    working_graph: WorkingGraph,
    assignment: List[int],
    rng: np.random.Generator,
    min_gain: float = 0,
    max_passes: int = 100,
) -> Tuple[List[int], bool]:
    """sweeps nodes in shuffled order, moving each to the neighbouring community with the best modularity gain

    Args:
        working_graph (WorkingGraph): graph of the current level
        assignment (List[int]): community per node, updated in place
        rng (np.random.Generator): source of the visit order
        min_gain (float, optional): a move must gain strictly more than this. Defaults to 0.
        max_passes (int, optional): cap on sweeps. Defaults to 100.

    Returns:
        Tuple[List[int], bool]: the assignment and whether any node moved
    """

    two_m = working_graph.total_weight
    if two_m == 0:
        return assignment, False

    m = two_m / 2
    strengths = working_graph.strengths

    total: Dict[int, float] = {}
    for node, community in enumerate(assignment):
        total[community] = total.get(community, 0) + strengths[node]

    improved = False
    for _ in range(max_passes):
        moved = False

        for node in rng.permutation(working_graph.n):
            node = int(node)
            k = strengths[node]
            own = assignment[node]

            links: Dict[int, float] = {}
            for neighbor, weight in working_graph.adjacency[node].items():
                community = assignment[neighbor]
                links[community] = links.get(community, 0) + weight

            total[own] -= k

            def _gain(community: int) -> float:
                return links.get(community, 0) / m - total.get(community, 0) * k / (2 * m * m)

            own_gain = _gain(own)
            best, best_gain = own, None
            for community in sorted(links):
                if community == own:
                    continue

                gain = _gain(community)
                if best_gain is None or gain > best_gain:
                    best, best_gain = community, gain

            if best != own and best_gain - own_gain > min_gain:
                assignment[node] = best
                total[best] = total.get(best, 0) + k
                moved = True
            else:
                total[own] += k

        if not moved:
            break
        improved = True

    return assignment, improved


def aggregate_graph(working_graph: WorkingGraph, assignment: Sequence[int]) -> WorkingGraph:
    """collapses every community into one node, internal weight folds into the self-loop

    Args:
        working_graph (WorkingGraph): graph of the current level
        assignment (Sequence[int]): community per node

    Returns:
        WorkingGraph: graph with one node per community, in order of first appearance
    """

    assignment = _compact(assignment)
    size = max(assignment) + 1 if assignment else 0

    adjacency: List[Dict[int, float]] = [{} for _ in range(size)]
    self_loops = [0.0] * size

    for node in range(working_graph.n):
        community = assignment[node]
        self_loops[community] += working_graph.self_loops[node]

        for neighbor, weight in working_graph.adjacency[node].items():
            other = assignment[neighbor]
            # every edge is visited from both ends
            if other == community:
                self_loops[community] += weight
            else:
                adjacency[community][other] = adjacency[community].get(other, 0) + weight

    return WorkingGraph(adjacency, self_loops)


def louvain(graph: Graph, config: Optional[LouvainConfig] = None, source: str = "") -> AlgoReport:
    """classic two-phase Louvain: local moving then aggregation, until a level moves nothing

    Args:
        graph (Graph): the graph
        config (Optional[LouvainConfig], optional): seed and thresholds. Defaults to None.
        source (str, optional): input description stored in the report. Defaults to "".

    Raises:
        EmptyGraphError: if the graph has no edges

    Returns:
        AlgoReport: flattened partition on the original nodes
    """

    if config is None:
        config = LouvainConfig()

    if graph.m == 0:
        raise EmptyGraphError("louvain needs at least one edge")

    with Timer() as timer:
        rng = np.random.default_rng(config.seed)
        working_graph = WorkingGraph.from_graph(graph)
        node_community = list(range(graph.n))
        level_modularity = [modularity(graph, Partition.singletons(graph))]

        for level in range(config.max_levels):
            assignment, improved = local_move_pass(
                working_graph,
                list(range(working_graph.n)),
                rng,
                min_gain=config.min_gain,
                max_passes=config.max_passes,
            )
            if not improved:
                break

            assignment = _compact(assignment)
            node_community = [assignment[community] for community in node_community]
            working_graph = aggregate_graph(working_graph, assignment)
            level_modularity.append(working_graph.modularity(list(range(working_graph.n))))

            log_message(
                logging.DEBUG,
                f"louvain level {level}: {working_graph.n} communities, Q = {level_modularity[-1]:.6f}",
            )

        partition = Partition.from_assignment(graph, node_community)
        q = modularity(graph, partition)

    report = AlgoReport(
        algorithm=Algorithm.louvain,
        source=source,
        n=graph.n,
        m=graph.m,
        modularity=q,
        num_communities=partition.num_communities,
        communities=partition.labeled_communities(),
        iterations=len(level_modularity) - 1,
        seed=config.seed,
        time_ms=timer.elapsed_ms,
        config=config.to_dict(),
    )
    report._partition = partition
    report._level_modularity = level_modularity

    return report


def louvain_best_of(
    graph: Graph, config: Optional[LouvainConfig] = None, seeds: Sequence[int] = range(10), source: str = ""
) -> AlgoReport:
    """runs Louvain once per seed and keeps the highest modularity, the earliest seed wins ties"""

    if config is None:
        config = LouvainConfig()

    best = None
    for seed in seeds:
        report = louvain(graph, config.model_copy(update={"seed": seed}), source=source)
        if best is None or report.modularity > best.modularity:
            best = report

    log_message(logging.INFO, f"louvain best of {len(seeds)} seeds: seed {best.seed}, Q = {best.modularity:.6f}")
    return best
