import sys
from typing import Optional, Tuple

from .arguments import BAConfig, GenerateArgs, PlantedConfig
from .enums import GeneratorFamily
from .graph import Graph, Partition, serialize_edgelist, write_edgelist, write_ground_truth
from .netgen import gen_ba, gen_planted, planted_params


def ground_truth_path(output: str) -> str:
    return f"{output}.truth"


def generate_graph(args: GenerateArgs) -> Tuple[Graph, Optional[Partition]]:
    if args.family == GeneratorFamily.ba:
        return gen_ba(BAConfig(n=args.n, m_attach=args.m_attach, seed=args.seed)), None
    elif args.family == GeneratorFamily.planted:
        p_in, p_out = planted_params(args.n, args.groups, args.avg_degree, args.ratio)
        config = PlantedConfig(sizes=[args.n // args.groups] * args.groups, p_in=p_in, p_out=p_out, seed=args.seed)
        return gen_planted(config)

    raise ValueError(f"unexpected family ({args.family})")


def cmd_gen(args: GenerateArgs) -> Graph:
    """generates a graph, the edge list goes to `output` (stdout without it) and planted ground truth next to it

    Args:
        args (GenerateArgs): generator arguments

    Returns:
        Graph: the generated graph
    """

    graph, ground_truth = generate_graph(args)

    if args.output is None:
        sys.stdout.write(serialize_edgelist(graph))
        return graph

    write_edgelist(graph, args.output)
    if ground_truth is not None:
        write_ground_truth(graph, ground_truth.community_indices(), ground_truth_path(args.output))

    if not args.logging_args.quiet:
        print(f"n = {graph.n} m = {graph.m}")

    return graph
