from typing import Tuple

from .arguments import DetectArgs
from .datasets import load_dataset
from .detection import run_algorithm
from .graph import Graph, read_edgelist
from .report import AlgoReport, write_report


def load_graph(args: DetectArgs) -> Tuple[Graph, str]:
    if args.dataset is not None:
        return load_dataset(args.dataset), f"dataset:{args.dataset}"
    return read_edgelist(args.input), args.input


def cmd_detect(args: DetectArgs) -> AlgoReport:
    """reads the graph, runs the requested algorithm and writes the JSON report

    Args:
        args (DetectArgs): detect arguments

    Returns:
        AlgoReport: the report
    """

    graph, source = load_graph(args)

    report = run_algorithm(
        graph,
        args.algo,
        merge_policy=args.merge_policy,
        iteration_args=args.iteration_args,
        louvain_config=args.louvain_config,
        num_seeds=args.num_seeds,
        source=source,
    )

    if args.output is not None:
        write_report(report, args.output)

    if not args.logging_args.quiet:
        print(f"Q = {report.modularity:.6f} communities = {report.num_communities}")

    return report
