import logging
from typing import Optional

from .arguments import IterationArgs, LouvainConfig, MergePolicy
from .enums import Algorithm
from .errors import EmptyGraphError
from .graph import Graph, modularity
from .intensity import ci_all, iterate_to_fixpoint
from .louvain import louvain, louvain_best_of
from .merging import greedy_merge
from .report import AlgoReport
from .utils import Timer, log_message


def detect(
    graph: Graph,
    algorithm: Algorithm,
    merge_policy: Optional[MergePolicy] = None,
    iteration_args: Optional[IterationArgs] = None,
    source: str = "",
) -> AlgoReport:
    """connect intensity scoring followed by the greedy merge walk

    CI scores the graph once, CIIA reweights until the edge order and signs are stable.

    Args:
        graph (Graph): the graph
        algorithm (Algorithm): ci or ciia
        merge_policy (Optional[MergePolicy], optional): merge walk policy. Defaults to None.
        iteration_args (Optional[IterationArgs], optional): ciia round cap. Defaults to None.
        source (str, optional): input description stored in the report. Defaults to "".

    Raises:
        EmptyGraphError: if the graph has no edges

    Returns:
        AlgoReport: report with the partition, merge log and iteration trace attached
    """

    if merge_policy is None:
        merge_policy = MergePolicy()
    if iteration_args is None:
        iteration_args = IterationArgs()

    if graph.m == 0:
        raise EmptyGraphError("community detection needs at least one edge")

    trace = None
    with Timer() as timer:
        if algorithm == Algorithm.ci:
            scores = ci_all(graph)
        elif algorithm == Algorithm.ciia:
            scores, trace = iterate_to_fixpoint(graph, iteration_args.max_iterations)
        else:
            raise ValueError(f"unexpected algorithm ({algorithm})")

        partition, merge_log = greedy_merge(graph, scores, merge_policy)
        q = modularity(graph, partition)

    config = {"merge_policy": merge_policy.to_dict()}
    if algorithm == Algorithm.ciia:
        config["iteration_args"] = iteration_args.to_dict()

    report = AlgoReport(
        algorithm=algorithm,
        source=source,
        n=graph.n,
        m=graph.m,
        modularity=q,
        num_communities=partition.num_communities,
        communities=partition.labeled_communities(),
        iterations=None if trace is None else trace.num_iterations,
        converged=None if trace is None else trace.converged,
        time_ms=timer.elapsed_ms,
        config=config,
    )
    report._partition = partition
    report._trace = trace
    report._merge_log = merge_log

    log_message(
        logging.INFO,
        f"{algorithm.value}: Q = {q:.6f}, {partition.num_communities} communities in {timer.elapsed_ms:.1f} ms",
    )

    return report


def run_algorithm(
    graph: Graph,
    algorithm: Algorithm,
    merge_policy: Optional[MergePolicy] = None,
    iteration_args: Optional[IterationArgs] = None,
    louvain_config: Optional[LouvainConfig] = None,
    num_seeds: int = 1,
    source: str = "",
) -> AlgoReport:
    """dispatches to the connect intensity pipeline or Louvain"""

    if algorithm == Algorithm.louvain:
        if louvain_config is None:
            louvain_config = LouvainConfig()

        if num_seeds == 1:
            return louvain(graph, louvain_config, source=source)

        seeds = range(louvain_config.seed, louvain_config.seed + num_seeds)
        return louvain_best_of(graph, louvain_config, seeds, source=source)

    return detect(graph, algorithm, merge_policy, iteration_args, source=source)
