from typing import List, Optional

from pydantic import PrivateAttr

from .defaults import VERSION
from .enums import Algorithm
from .graph import Graph, Partition, modularity
from .utils import BaseArgs, atomic_write


class AlgoReport(BaseArgs):
    """result of one detection run, serialized as JSON"""

    # algorithm that produced the partition
    algorithm: Algorithm
    # input path, dataset name or generator description
    source: str = ""
    n: int
    m: int
    modularity: float
    num_communities: int
    # communities as label lists, sorted by their smallest node id
    communities: List[List[str]]
    # ciia reweighting rounds or louvain levels
    iterations: Optional[int] = None
    converged: Optional[bool] = None
    # louvain seed
    seed: Optional[int] = None
    time_ms: float = 0
    version: str = VERSION
    config: dict = {}

    _partition: Optional[Partition] = PrivateAttr(default=None)
    _trace: object = PrivateAttr(default=None)
    _merge_log: Optional[list] = PrivateAttr(default=None)
    _level_modularity: Optional[List[float]] = PrivateAttr(default=None)

    @property
    def partition(self) -> Optional[Partition]:
        return self._partition

    @property
    def trace(self):
        return self._trace

    @property
    def merge_log(self) -> Optional[list]:
        return self._merge_log

    @property
    def level_modularity(self) -> Optional[List[float]]:
        return self._level_modularity

    def to_json(self) -> str:
        return self.model_dump_json(indent=2) + "\n"

    def recompute_modularity(self, graph: Graph) -> float:
        """modularity of the reported communities on `graph`, independent of the stored value"""

        return modularity(graph, Partition.from_communities(graph, self.communities))


def write_report(report: AlgoReport, path: str) -> None:
    with atomic_write(path) as f:
        f.write(report.to_json())


def read_report(path: str) -> AlgoReport:
    with open(path, "r") as f:
        return AlgoReport.model_validate_json(f.read())
