import logging
import multiprocessing
import sys
from typing import List, Optional, Tuple

import pandas as pd

from .arguments import BAConfig, BenchArgs, LouvainConfig, PlantedConfig
from .defaults import BENCH_CSV_COLUMNS
from .detection import run_algorithm
from .enums import Algorithm, GeneratorFamily
from .graph import Graph
from .netgen import gen_ba, gen_planted, planted_params
from .utils import BaseArgs, ProgressBar, atomic_write, log_message


class BenchRow(BaseArgs):
    """one (graph, algorithm, seed) run"""

    family: GeneratorFamily
    n: int
    m: int
    algo: Algorithm
    seed: int
    modularity: float
    time_ms: float
    iterations: int


def bench_graph(args: BenchArgs, n: int, seed: int) -> Graph:
    if args.family == GeneratorFamily.ba:
        return gen_ba(BAConfig(n=n, m_attach=args.m_attach, seed=seed))
    elif args.family == GeneratorFamily.planted:
        p_in, p_out = planted_params(n, args.groups, args.avg_degree, args.ratio)
        config = PlantedConfig(sizes=[n // args.groups] * args.groups, p_in=p_in, p_out=p_out, seed=seed)
        graph, _ = gen_planted(config)
        return graph

    raise ValueError(f"unexpected family ({args.family})")


def run_cell(cell: Tuple[BenchArgs, int, int]) -> List[BenchRow]:
    """generates the graph of one (size, seed) cell and runs every requested algorithm on it"""

    args, n, seed = cell
    graph = bench_graph(args, n, seed)

    rows = []
    for algorithm in args.get_algorithms():
        report = run_algorithm(
            graph,
            algorithm,
            merge_policy=args.merge_policy,
            iteration_args=args.iteration_args,
            louvain_config=LouvainConfig(seed=seed),
            source=f"{args.family.value}:n={n}:seed={seed}",
        )

        rows.append(
            BenchRow(
                family=args.family,
                n=graph.n,
                m=graph.m,
                algo=algorithm,
                seed=seed,
                modularity=report.modularity,
                time_ms=report.time_ms,
                iterations=report.iterations or 0,
            )
        )

    return rows


def rows_to_frame(rows: List[BenchRow]) -> pd.DataFrame:
    rows = sorted(rows, key=lambda row: (row.family.value, row.n, row.algo.value, row.seed))
    return pd.DataFrame([row.to_dict() for row in rows], columns=BENCH_CSV_COLUMNS)


def _collect(rows: List[BenchRow], cell_rows: List[BenchRow], progress_bar: ProgressBar) -> None:
    rows.extend(cell_rows)
    progress_bar.update()
    progress_bar.track(rows=len(rows))


def cmd_bench(args: BenchArgs, output: Optional[str] = None) -> pd.DataFrame:
    """runs every (size, seed, algorithm) combination and writes one CSV row per run

    Args:
        args (BenchArgs): sweep arguments
        output (Optional[str], optional): overrides `args.output`. Defaults to None.

    Returns:
        pd.DataFrame: the rows, sorted by family, n, algo and seed
    """

    output = args.output if output is None else output
    cells = [(args, n, seed) for n in args.get_sizes() for seed in range(args.seeds)]

    progress_bar = ProgressBar(0, len(cells), desc="bench", disable=args.logging_args.quiet)
    rows: List[BenchRow] = []

    if args.workers > 1:
        with multiprocessing.Pool(args.workers) as pool:
            for cell_rows in pool.imap_unordered(run_cell, cells):
                _collect(rows, cell_rows, progress_bar)
    else:
        for cell_rows in map(run_cell, cells):
            _collect(rows, cell_rows, progress_bar)

    progress_bar.close()

    frame = rows_to_frame(rows)
    log_message(logging.INFO, f"bench finished with {len(frame)} rows")

    if output is None:
        frame.to_csv(sys.stdout, index=False)
    else:
        with atomic_write(output) as f:
            frame.to_csv(f, index=False)

    return frame
