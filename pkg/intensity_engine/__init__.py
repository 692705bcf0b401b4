from .arguments import BAConfig, IterationArgs, LouvainConfig, MergePolicy, PlantedConfig
from .datasets import load_dataset
from .defaults import VERSION
from .detection import detect, run_algorithm
from .enums import Algorithm, GeneratorFamily, IsolatedNodeRule, TieBreak, ZeroGainRule
from .graph import Graph, Partition, merge_gain, modularity, parse_edgelist, read_edgelist
from .intensity import ci_all, ci_components, ci_edge, iterate_to_fixpoint
from .louvain import louvain, louvain_best_of
from .merging import greedy_merge
from .netgen import gen_ba, gen_planted, planted_params
from .report import AlgoReport
