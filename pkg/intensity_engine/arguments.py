import logging
from argparse import ArgumentParser, Namespace
from typing import Any, List, Optional, Tuple, Union

from .defaults import DEFAULT_MAX_ITERATIONS
from .enums import Algorithm, GeneratorFamily, IsolatedNodeRule, Mode, StopRule, TieBreak, ZeroGainRule
from .utils import BaseArgs, load_yaml, log_message, set_logger


def _check_not_None(object_name_list: List[Tuple[Any, str]]) -> None:
    for obj, name in object_name_list:
        assert obj is not None, f"{name} cannot be None"


class MergePolicy(BaseArgs):
    # skip edges with a negative modularity gain, or stop the walk at the first one
    stop_rule: StopRule = StopRule.skip_negative
    # what to do with a gain of exactly 0
    zero_gain_rule: ZeroGainRule = ZeroGainRule.skip
    # ordering of edges with equal connect intensity
    tie_break: TieBreak = TieBreak.lexicographic
    # how an edge with exactly one singleton endpoint is merged
    isolated_node_rule: IsolatedNodeRule = IsolatedNodeRule.edge
    # seed for the random tie break
    seed: int = 42


class IterationArgs(BaseArgs):
    # cap on scoring rounds, the unweighted round included
    max_iterations: int = DEFAULT_MAX_ITERATIONS

    def model_post_init(self, __context: Any) -> None:
        assert self.max_iterations >= 1, "max_iterations should be at least 1"


class LouvainConfig(BaseArgs):
    # seed for the node visit order
    seed: int = 42
    # a node move is accepted only above this gain
    min_gain: float = 0
    # sweeps over the nodes per level
    max_passes: int = 100
    # cap on aggregation levels
    max_levels: int = 100

    def model_post_init(self, __context: Any) -> None:
        assert self.min_gain >= 0, "min_gain should be non-negative"
        assert self.max_passes >= 1, "max_passes should be at least 1"
        assert self.max_levels >= 1, "max_levels should be at least 1"


class PlantedConfig(BaseArgs):
    # size of every planted community
    sizes: List[int] = None
    # intra-community edge probability
    p_in: float = None
    # inter-community edge probability
    p_out: float = None
    # random seed
    seed: int = 42

    def model_post_init(self, __context: Any) -> None:
        _check_not_None([(self.sizes, "sizes"), (self.p_in, "p_in"), (self.p_out, "p_out")])

        assert len(self.sizes) > 0 and all(size > 0 for size in self.sizes), "sizes should be positive"
        assert 0 <= self.p_out <= self.p_in <= 1, "probabilities should satisfy 0 <= p_out <= p_in <= 1"

    @property
    def n(self) -> int:
        return sum(self.sizes)


class BAConfig(BaseArgs):
    # final number of nodes
    n: int = None
    # edges attached by every new node
    m_attach: int = 1
    # random seed
    seed: int = 42

    def model_post_init(self, __context: Any) -> None:
        _check_not_None([(self.n, "n")])

        assert 1 <= self.m_attach < self.n, "m_attach should satisfy 1 <= m_attach < n"


class LoggingArgs(BaseArgs):
    # logging level
    logging_level: str = "INFO"
    # whether to use colored logs
    use_colored_logs: bool = False
    # suppress the stdout summary and lower logging to warnings
    quiet: bool = False


class DetectArgs(BaseArgs):
    # algorithm to run
    algo: Algorithm = None
    # edge list to read
    input: Optional[str] = None
    # bundled dataset to use instead of an input file
    dataset: Optional[str] = None
    # report path
    output: Optional[str] = None
    # louvain seed
    seed: Optional[int] = None
    # number of louvain seeds, the best run is reported
    num_seeds: int = 1
    # ciia related arguments
    iteration_args: IterationArgs = IterationArgs()
    # merge related arguments
    merge_policy: MergePolicy = MergePolicy()
    # louvain related arguments
    louvain_config: LouvainConfig = LouvainConfig()
    # logging related arguments
    logging_args: LoggingArgs = LoggingArgs()

    def model_post_init(self, __context: Any) -> None:
        _check_not_None([(self.algo, "algo")])

        assert (self.input is None) != (self.dataset is None), "exactly one of input or dataset should be specified"
        assert self.num_seeds >= 1, "num_seeds should be at least 1"

        if self.seed is not None:
            self.louvain_config.seed = self.seed


class GenerateArgs(BaseArgs):
    # generator family
    family: GeneratorFamily = None
    # number of nodes
    n: int = None
    # edges per new node (ba)
    m_attach: int = 1
    # number of planted groups (planted)
    groups: Optional[int] = None
    # average degree (planted)
    avg_degree: Optional[float] = None
    # p_in / p_out (planted)
    ratio: Optional[float] = None
    # random seed
    seed: int = 42
    # edge list path, the ground truth goes next to it
    output: Optional[str] = None
    # logging related arguments
    logging_args: LoggingArgs = LoggingArgs()

    def model_post_init(self, __context: Any) -> None:
        _check_not_None([(self.family, "family"), (self.n, "n")])

        if self.family == GeneratorFamily.planted:
            _check_not_None([(self.groups, "groups"), (self.avg_degree, "avg_degree"), (self.ratio, "ratio")])


class BenchArgs(BaseArgs):
    # generator family
    family: GeneratorFamily = None
    # node counts as start:stop:step, stop included
    sizes: Union[int, str] = None
    # comma separated algorithms
    algos: str = "ci,ciia,louvain"
    # seeds per size
    seeds: int = 1
    # edges per new node (ba)
    m_attach: int = 1
    # number of planted groups (planted)
    groups: int = 10
    # average degree (planted)
    avg_degree: float = 6
    # p_in / p_out (planted)
    ratio: float = 100
    # worker processes
    workers: int = 1
    # csv path, stdout if not given
    output: Optional[str] = None
    # ciia related arguments
    iteration_args: IterationArgs = IterationArgs()
    # merge related arguments
    merge_policy: MergePolicy = MergePolicy()
    # logging related arguments
    logging_args: LoggingArgs = LoggingArgs()

    def model_post_init(self, __context: Any) -> None:
        _check_not_None([(self.family, "family"), (self.sizes, "sizes")])

        assert self.seeds >= 1, "seeds should be at least 1"
        assert self.workers >= 1, "workers should be at least 1"

        # malformed sizes or algos fail here
        self.get_sizes()
        self.get_algorithms()

    def get_sizes(self) -> List[int]:
        parts = str(self.sizes).split(":")
        try:
            values = [int(part) for part in parts]
        except ValueError:
            raise ValueError(f"invalid sizes ({self.sizes})")

        if len(values) == 1:
            start, stop, step = values[0], values[0], 1
        elif len(values) == 3:
            start, stop, step = values
        else:
            raise ValueError(f"invalid sizes ({self.sizes}), expected start:stop:step")

        if start < 2 or step < 1 or stop < start:
            raise ValueError(f"invalid sizes ({self.sizes})")

        return list(range(start, stop + 1, step))

    def get_algorithms(self) -> List[Algorithm]:
        try:
            return [Algorithm(name.strip()) for name in self.algos.split(",")]
        except ValueError:
            raise ValueError(f"invalid algos ({self.algos})")


class SelfTestArgs(BaseArgs):
    # logging related arguments
    logging_args: LoggingArgs = LoggingArgs()


_MODE_ARGS_MAP = {
    Mode.detect: DetectArgs,
    Mode.generate: GenerateArgs,
    Mode.bench: BenchArgs,
    Mode.selftest: SelfTestArgs,
}

# flags that live inside nested args
_NESTED_FLAGS = {
    "max_iterations": "iteration_args",
    "stop_rule": "merge_policy",
    "zero_gain_rule": "merge_policy",
    "tie_break": "merge_policy",
    "isolated_node_rule": "merge_policy",
}


def get_parser() -> ArgumentParser:
    parser = ArgumentParser(prog="intensity-engine", description="connect intensity community detection")
    subparsers = parser.add_subparsers(dest="mode", required=True)

    def _add_common(subparser: ArgumentParser) -> None:
        subparser.add_argument("--config", type=str, default=None, help="path for a yaml config")
        subparser.add_argument("--quiet", action="store_true", default=None, help="only print warnings")
        subparser.add_argument("--logging-level", dest="logging_level", type=str, default=None)

    def _add_merge(subparser: ArgumentParser) -> None:
        subparser.add_argument("--max-iters", dest="max_iterations", type=int, default=None)
        subparser.add_argument("--stop-rule", dest="stop_rule", type=str, default=None)
        subparser.add_argument("--zero-gain-rule", dest="zero_gain_rule", type=str, default=None)
        subparser.add_argument("--tie-break", dest="tie_break", type=str, default=None)
        subparser.add_argument("--isolated-node-rule", dest="isolated_node_rule", type=str, default=None)

    detect = subparsers.add_parser(Mode.detect.value, help="detect communities in an edge list")
    _add_common(detect)
    _add_merge(detect)
    detect.add_argument("--algo", type=str, default=None, help="ci, ciia or louvain")
    detect.add_argument("--input", type=str, default=None, help="edge list path")
    detect.add_argument("--dataset", type=str, default=None, help="bundled dataset name")
    detect.add_argument("--output", type=str, default=None, help="report path")
    detect.add_argument("--seed", type=int, default=None, help="louvain seed")
    detect.add_argument("--num-seeds", dest="num_seeds", type=int, default=None, help="louvain restarts")

    generate = subparsers.add_parser(Mode.generate.value, help="generate a synthetic graph")
    _add_common(generate)
    generate.add_argument("family", type=str, help="ba or planted")
    generate.add_argument("--n", type=int, default=None)
    generate.add_argument("--m-attach", dest="m_attach", type=int, default=None)
    generate.add_argument("--groups", type=int, default=None)
    generate.add_argument("--avg-degree", dest="avg_degree", type=float, default=None)
    generate.add_argument("--ratio", type=float, default=None)
    generate.add_argument("--seed", type=int, default=None)
    generate.add_argument("--output", type=str, default=None, help="edge list path")

    bench = subparsers.add_parser(Mode.bench.value, help="compare algorithms on synthetic graphs")
    _add_common(bench)
    _add_merge(bench)
    bench.add_argument("--family", type=str, default=None, help="ba or planted")
    bench.add_argument("--sizes", type=str, default=None, help="start:stop:step")
    bench.add_argument("--algos", type=str, default=None, help="comma separated algorithms")
    bench.add_argument("--seeds", type=int, default=None)
    bench.add_argument("--m-attach", dest="m_attach", type=int, default=None)
    bench.add_argument("--groups", type=int, default=None)
    bench.add_argument("--avg-degree", dest="avg_degree", type=float, default=None)
    bench.add_argument("--ratio", type=float, default=None)
    bench.add_argument("--workers", type=int, default=None)
    bench.add_argument("--output", type=str, default=None, help="csv path")

    selftest = subparsers.add_parser(Mode.selftest.value, help="check the bundled fixtures")
    _add_common(selftest)

    return parser


def _merge_flags(config: dict, flags: Namespace) -> dict:
    for key, value in vars(flags).items():
        if key in ["mode", "config"] or value is None:
            continue

        if key in ["quiet", "logging_level"]:
            config.setdefault("logging_args", {})[key] = value
        elif key in _NESTED_FLAGS:
            config.setdefault(_NESTED_FLAGS[key], {})[key] = value
        else:
            config[key] = value

    return config


ModeArgs = Union[DetectArgs, GenerateArgs, BenchArgs, SelfTestArgs]


def get_args(argv: Optional[List[str]] = None) -> Tuple[Mode, ModeArgs]:
    """parses the command line, a yaml config is loaded first and flags override it

    Args:
        argv (Optional[List[str]], optional): command line without the program name. Defaults to None.

    Returns:
        Tuple[Mode, ModeArgs]: subcommand and its args
    """

    flags = get_parser().parse_args(argv)
    mode = Mode(flags.mode)

    config: dict = {} if flags.config is None else load_yaml(flags.config)
    config = _merge_flags(config, flags)

    args = _MODE_ARGS_MAP[mode](**config)

    logging_args = args.logging_args
    level = logging.WARNING if logging_args.quiet else logging.getLevelName(logging_args.logging_level.upper())
    set_logger(level, colored_log=logging_args.use_colored_logs)
    log_args(args)

    return mode, args


def log_args(args: BaseArgs) -> None:
    """log args

    Args:
        args (BaseArgs): args of the subcommand
    """

    def _iterate_args_recursively(args: Union[BaseArgs, dict], prefix: str = "") -> List[str]:
        result = []

        if isinstance(args, BaseArgs):
            args = dict(args)

        p = len(prefix)

        for k, v in args.items():
            suffix = "." * (48 - len(k) - p)

            if isinstance(v, (BaseArgs, dict)):
                if isinstance(v, dict) and len(v) == 0:
                    result.append(f"{prefix}{k} {suffix} " + r"{}")
                else:
                    kv_list_subargs = _iterate_args_recursively(v, prefix + " " * 4)
                    result.append(f"{prefix}{k}:\n" + "\n".join(kv_list_subargs))
            else:
                if hasattr(v, "value"):
                    v = v.value
                result.append(f"{prefix}{k} {suffix} " + str(v))

        result.sort(key=lambda x: x.lower())
        return result

    log_message(logging.INFO, "------------------------ arguments ------------------------")
    for line in _iterate_args_recursively(args):
        for l in line.split("\n"):
            log_message(logging.INFO, l)
    log_message(logging.INFO, "-------------------- end of arguments ---------------------")
