from typing import Dict, List, Mapping, Sequence, Set, Union

from ..errors import EmptyGraphError, InvalidMergeError, UnknownCommunityError
from .graph import Graph


class Partition:
    """node to community assignment with per-community internal edge count and total degree

    Community ids are node ids of the community's founding member. Merging keeps the id of the absorbing community.
    """

    def __init__(self, graph: Graph, assignment: Sequence[int]) -> None:
        assert len(assignment) == graph.n, "assignment should cover every node"

        self.graph = graph
        self.assignment: List[int] = list(assignment)

        self.members: Dict[int, Set[int]] = {}
        self.total_degree: Dict[int, int] = {}
        self.internal_edges: Dict[int, int] = {}

        for node, community in enumerate(self.assignment):
            self.members.setdefault(community, set()).add(node)
            self.total_degree[community] = self.total_degree.get(community, 0) + graph.degrees[node]
            self.internal_edges.setdefault(community, 0)

        for i, j in graph.edges:
            if self.assignment[i] == self.assignment[j]:
                self.internal_edges[self.assignment[i]] += 1

    @classmethod
    def singletons(cls, graph: Graph) -> "Partition":
        return cls(graph, list(range(graph.n)))

    @classmethod
    def from_assignment(cls, graph: Graph, assignment: Union[Sequence[int], Mapping[str, int]]) -> "Partition":
        """builds a partition from arbitrary community labels, relabelled to founding-member ids

        Args:
            graph (Graph): the graph
            assignment (Union[Sequence[int], Mapping[str, int]]): community per node id, or per node label

        Returns:
            Partition: the partition
        """

        if isinstance(assignment, Mapping):
            assignment = [assignment[label] for label in graph.labels]

        first_member = {}
        relabelled = []
        for node, community in enumerate(assignment):
            relabelled.append(first_member.setdefault(community, node))

        return cls(graph, relabelled)

    @classmethod
    def from_communities(cls, graph: Graph, communities: Sequence[Sequence[str]]) -> "Partition":
        mapping = {}
        for index, community in enumerate(communities):
            for label in community:
                mapping[str(label)] = index

        return cls.from_assignment(graph, mapping)

    @property
    def num_communities(self) -> int:
        return len(self.members)

    def community_of(self, node: int) -> int:
        return self.assignment[node]

    def is_singleton(self, community: int) -> bool:
        return len(self.members[community]) == 1

    def check_community(self, community: int) -> None:
        if community not in self.members:
            raise UnknownCommunityError(community)

    def edges_between(self, community_a: int, community_b: int) -> int:
        """number of edges with one endpoint in each community"""

        small, large = community_a, community_b
        if len(self.members[small]) > len(self.members[large]):
            small, large = large, small

        count = 0
        for node in self.members[small]:
            for neighbor in self.graph.adjacency[node]:
                if self.assignment[neighbor] == large:
                    count += 1

        return count

    def neighbor_communities(self, node: int) -> Dict[int, int]:
        """edge count from `node` to every community adjacent to it, its own community excluded"""

        own = self.assignment[node]
        result = {}
        for neighbor in self.graph.adjacency[node]:
            community = self.assignment[neighbor]
            if community != own:
                result[community] = result.get(community, 0) + 1

        return result

    def communities(self) -> List[List[int]]:
        """member lists sorted internally and by their smallest member"""

        return sorted((sorted(members) for members in self.members.values()), key=lambda x: x[0])

    def labeled_communities(self) -> List[List[str]]:
        return [[self.graph.labels[node] for node in members] for members in self.communities()]

    @property
    def intra_edge_count(self) -> int:
        return sum(self.internal_edges.values())

    @property
    def inter_edge_count(self) -> int:
        return self.graph.m - self.intra_edge_count

    def community_indices(self) -> List[int]:
        """community per node renumbered 0..k-1 in order of first appearance"""

        mapping: Dict[int, int] = {}
        return [mapping.setdefault(community, len(mapping)) for community in self.assignment]

    def copy(self) -> "Partition":
        return Partition(self.graph, self.assignment)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(communities={self.num_communities})"


def modularity(graph: Graph, partition: Partition) -> float:
    """Newman modularity Q = sum_c [e_c / m - (d_c / 2m)^2], recomputed from the assignment

    Args:
        graph (Graph): the graph
        partition (Partition): partition over `graph`

    Raises:
        EmptyGraphError: if the graph has no edges

    Returns:
        float: modularity
    """

    if graph.m == 0:
        raise EmptyGraphError("modularity is undefined for a graph without edges")

    assignment = partition.assignment
    internal: Dict[int, int] = {}
    degree: Dict[int, int] = {}

    for node, community in enumerate(assignment):
        degree[community] = degree.get(community, 0) + graph.degrees[node]

    for i, j in graph.edges:
        if assignment[i] == assignment[j]:
            internal[assignment[i]] = internal.get(assignment[i], 0) + 1

    m = graph.m
    return sum(internal.get(c, 0) / m - (d / (2 * m)) ** 2 for c, d in degree.items())


def merge_gain(graph: Graph, partition: Partition, community_a: int, community_b: int) -> float:
    """modularity change of merging two communities, e_AB / m - d_A * d_B / (2 m^2)

    Args:
        graph (Graph): the graph
        partition (Partition): current partition
        community_a (int): first community id
        community_b (int): second community id

    Raises:
        InvalidMergeError: if both ids are the same community
        UnknownCommunityError: if either id is not a community
        EmptyGraphError: if the graph has no edges

    Returns:
        float: gain
    """

    if community_a == community_b:
        raise InvalidMergeError(f"can't merge community ({community_a}) with itself")

    partition.check_community(community_a)
    partition.check_community(community_b)

    if graph.m == 0:
        raise EmptyGraphError("modularity is undefined for a graph without edges")

    m = graph.m
    e_ab = partition.edges_between(community_a, community_b)
    return e_ab / m - partition.total_degree[community_a] * partition.total_degree[community_b] / (2 * m * m)


def apply_merge(partition: Partition, community_a: int, community_b: int) -> Partition:
    """moves every node of `community_b` into `community_a`, updating aggregates in place

    Args:
        partition (Partition): partition to update
        community_a (int): absorbing community
        community_b (int): absorbed community

    Raises:
        InvalidMergeError: if both ids are the same community
        UnknownCommunityError: if either id is not a community

    Returns:
        Partition: the same partition object, updated
    """

    if community_a == community_b:
        raise InvalidMergeError(f"can't merge community ({community_a}) with itself")

    partition.check_community(community_a)
    partition.check_community(community_b)

    e_ab = partition.edges_between(community_a, community_b)

    moved = partition.members.pop(community_b)
    for node in moved:
        partition.assignment[node] = community_a
    partition.members[community_a].update(moved)

    partition.total_degree[community_a] += partition.total_degree.pop(community_b)
    partition.internal_edges[community_a] += partition.internal_edges.pop(community_b) + e_ab

    return partition
