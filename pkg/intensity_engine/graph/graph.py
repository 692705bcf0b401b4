from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from ..errors import NotAnEdgeError, SelfLoopError


class Graph:
    """immutable simple undirected graph, node ids are dense integers 0..n-1 in first-appearance order"""

    __slots__ = ("labels", "label_to_id", "adjacency", "neighbor_sets", "degrees", "edges", "n", "m")

    def __init__(self, labels: Sequence[str], edges: Iterable[Tuple[int, int]]) -> None:
        labels = tuple(str(label) for label in labels)
        label_to_id = {label: index for index, label in enumerate(labels)}
        assert len(label_to_id) == len(labels), "node labels should be unique"

        neighbors: List[set] = [set() for _ in labels]
        unique_edges = []
        for i, j in edges:
            if i == j:
                raise SelfLoopError(labels[i])
            if j in neighbors[i]:
                continue

            neighbors[i].add(j)
            neighbors[j].add(i)
            unique_edges.append((i, j))

        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "label_to_id", label_to_id)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(s)) for s in neighbors))
        object.__setattr__(self, "neighbor_sets", tuple(frozenset(s) for s in neighbors))
        object.__setattr__(self, "degrees", tuple(len(s) for s in neighbors))
        object.__setattr__(self, "edges", tuple(unique_edges))
        object.__setattr__(self, "n", len(labels))
        object.__setattr__(self, "m", len(unique_edges))

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError(f"{self.__class__.__name__} is immutable")

    @classmethod
    def from_labeled_edges(cls, pairs: Iterable[Tuple[str, str]], nodes: Iterable[str] = ()) -> "Graph":
        """builds a graph from label pairs, `nodes` are registered first and may stay isolated

        Args:
            pairs (Iterable[Tuple[str, str]]): edges as label pairs
            nodes (Iterable[str], optional): labels to register before the edges. Defaults to ().

        Returns:
            Graph: the graph
        """

        label_to_id: Dict[str, int] = {}

        def _get_id(label: str) -> int:
            label = str(label)
            if label not in label_to_id:
                label_to_id[label] = len(label_to_id)
            return label_to_id[label]

        for label in nodes:
            _get_id(label)

        edges = [(_get_id(u), _get_id(v)) for u, v in pairs]
        return cls(list(label_to_id), edges)

    def neighbors(self, i: int) -> Tuple[int, ...]:
        return self.adjacency[i]

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.neighbor_sets[i]

    def check_edge(self, i: int, j: int) -> None:
        if not self.has_edge(i, j):
            raise NotAnEdgeError(i, j)

    def id_of(self, label: str) -> int:
        return self.label_to_id[str(label)]

    def edge_key(self, i: int, j: int) -> Tuple[str, str]:
        """canonical (min-label, max-label) key of an edge, used for deterministic tie-breaks"""

        a, b = self.labels[i], self.labels[j]
        return (a, b) if a <= b else (b, a)

    def labeled_edges(self) -> List[Tuple[str, str]]:
        return [(self.labels[i], self.labels[j]) for i, j in self.edges]

    @property
    def isolated_nodes(self) -> FrozenSet[int]:
        return frozenset(i for i, k in enumerate(self.degrees) if k == 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.labels == other.labels and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.labels, self.edges))

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(n={self.n}, m={self.m})"
