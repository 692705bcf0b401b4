from typing import NamedTuple, Tuple

from ..graph import Graph


class Circle(NamedTuple):
    """S_{i->j}: node i with its neighbours, j removed"""

    anchor: int
    excluded: int
    members: Tuple[int, ...]

    def degree(self, graph: Graph) -> int:
        return sum(graph.degrees[u] for u in self.members)


def circle(graph: Graph, i: int, j: int) -> Circle:
    """circle of `i` as seen from the edge (i, j)

    Args:
        graph (Graph): the graph
        i (int): anchor node
        j (int): excluded neighbour

    Raises:
        NotAnEdgeError: if i and j are not adjacent

    Returns:
        Circle: members in ascending id order
    """

    graph.check_edge(i, j)

    members = [u for u in graph.adjacency[i] if u != j]
    members.append(i)
    return Circle(anchor=i, excluded=j, members=tuple(sorted(members)))
