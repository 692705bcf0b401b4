from typing import Dict, List, Tuple

from ..graph import Graph
from .circle import circle


class EdgeScore:
    """connect intensity of an edge with its four edge-count components"""

    __slots__ = ("i", "j", "e_a", "e_ra", "e_p", "e_rp", "ci")

    def __init__(self, i: int, j: int, e_a: float, e_ra: float, e_p: float, e_rp: float) -> None:
        self.i = i
        self.j = j
        self.e_a = e_a
        self.e_ra = e_ra
        self.e_p = e_p
        self.e_rp = e_rp
        self.ci = (e_a - e_ra) - (e_p - e_rp)

    @property
    def components(self) -> Tuple[float, float, float, float]:
        return self.e_a, self.e_ra, self.e_p, self.e_rp

    @property
    def sign(self) -> int:
        return (self.ci > 0) - (self.ci < 0)

    def edge_ids(self) -> Tuple[int, int]:
        return (self.i, self.j) if self.i < self.j else (self.j, self.i)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(edge=({self.i}, {self.j}), ci={self.ci})"


def score_circles(graph: Graph, a: Dict[int, float], b: Dict[int, float]) -> Tuple[float, float, float, float]:
    """(E_a, E_ra, E_p, E_rp) for two circles given as member -> weight maps

    Members with zero weight must already be left out. Pairs inside the overlap of the two circles are counted once:
    E_ra and E_rp remove the repeated half of every overlap pair and the whole u == v term.

    Args:
        graph (Graph): the graph
        a (Dict[int, float]): weights of the i circle members towards i
        b (Dict[int, float]): weights of the j circle members towards j

    Returns:
        Tuple[float, float, float, float]: E_a, E_ra, E_p, E_rp
    """

    adjacency = graph.adjacency
    degrees = graph.degrees

    e_a = 0
    if len(a) <= len(b):
        for u, a_u in a.items():
            for v in adjacency[u]:
                if v in b:
                    e_a += a_u * b[v]
    else:
        for v, b_v in b.items():
            for u in adjacency[v]:
                if u in a:
                    e_a += a[u] * b_v

    overlap = sorted(a.keys() & b.keys())

    e_ra = 0
    repeated_expected = 0
    for index, u in enumerate(overlap):
        k_u = degrees[u]
        repeated_expected += a[u] * b[u] * k_u * k_u

        for v in overlap[index + 1 :]:
            pair = (a[u] * b[v] + a[v] * b[u]) / 2
            if graph.has_edge(u, v):
                e_ra += pair
            repeated_expected += pair * k_u * degrees[v]

    two_m = 2 * graph.m
    k_a = sum(a_u * degrees[u] for u, a_u in a.items())
    k_b = sum(b_v * degrees[v] for v, b_v in b.items())

    e_p = k_a * k_b / two_m
    e_rp = repeated_expected / two_m

    return e_a, e_ra, e_p, e_rp


def ci_components(graph: Graph, i: int, j: int) -> Tuple[float, float, float, float]:
    """unweighted (E_a, E_ra, E_p, E_rp) of the edge (i, j)

    Args:
        graph (Graph): the graph
        i (int): first endpoint
        j (int): second endpoint

    Raises:
        NotAnEdgeError: if i and j are not adjacent

    Returns:
        Tuple[float, float, float, float]: E_a, E_ra, E_p, E_rp
    """

    a = dict.fromkeys(circle(graph, i, j).members, 1)
    b = dict.fromkeys(circle(graph, j, i).members, 1)
    return score_circles(graph, a, b)


def ci_edge(graph: Graph, i: int, j: int) -> EdgeScore:
    return EdgeScore(i, j, *ci_components(graph, i, j))


def sort_scores(graph: Graph, scores: List[EdgeScore]) -> List[EdgeScore]:
    """descending connect intensity, ties broken by the (min-label, max-label) edge key"""

    return sorted(scores, key=lambda score: (-score.ci, graph.edge_key(score.i, score.j)))


def ci_all(graph: Graph) -> List[EdgeScore]:
    """unweighted connect intensity of every edge, computed once per undirected edge

    Args:
        graph (Graph): the graph

    Returns:
        List[EdgeScore]: scores sorted by descending connect intensity
    """

    return sort_scores(graph, [ci_edge(graph, i, j) for i, j in graph.edges])
