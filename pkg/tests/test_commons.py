from itertools import product
from typing import Any, List, Tuple
from unittest import TestCase

import numpy as np

from intensity_engine.arguments import DetectArgs
from intensity_engine.datasets import load_dataset
from intensity_engine.graph import Graph
from intensity_engine.utils import load_yaml


class TestCommons(TestCase):
    @staticmethod
    def make_args_matrix(*args_lists) -> List[Any]:
        return [p for p in product(*args_lists)]

    @staticmethod
    def load_detect_args_for_unit_tests() -> DetectArgs:
        return DetectArgs(**load_yaml("tests/test_config.yml"))

    @staticmethod
    def get_florentine() -> Graph:
        return load_dataset("florentine")

    @staticmethod
    def get_example2() -> Graph:
        return load_dataset("example2")

    @staticmethod
    def get_triangle() -> Graph:
        return Graph.from_labeled_edges([("a", "b"), ("b", "c"), ("a", "c")])

    @staticmethod
    def get_two_triangles() -> Graph:
        return Graph.from_labeled_edges([("0", "1"), ("1", "2"), ("0", "2"), ("3", "4"), ("4", "5"), ("3", "5")])

    @staticmethod
    def get_random_graph(n: int, p: float, seed: int) -> Graph:
        """G(n, p) with every node registered, labels are 0..n-1"""

        rng = np.random.default_rng(seed)
        edges = [(str(u), str(v)) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        return Graph.from_labeled_edges(edges, nodes=[str(u) for u in range(n)])

    @staticmethod
    def naive_ci_components(graph: Graph, i: int, j: int) -> Tuple[float, float, float, float]:
        """unweighted components by double loops over every node pair"""

        n = graph.n
        in_i = [u == i or (u != j and graph.has_edge(u, i)) for u in range(n)]
        in_j = [v == j or (v != i and graph.has_edge(v, j)) for v in range(n)]
        overlap = [in_i[u] and in_j[u] for u in range(n)]
        k = graph.degrees
        two_m = 2 * graph.m

        e_a = 0
        e_ra = 0
        repeated = 0
        for u in range(n):
            if overlap[u]:
                repeated += k[u] * k[u]

            for v in range(n):
                if in_i[u] and in_j[v] and graph.has_edge(u, v):
                    e_a += 1
                if u < v and overlap[u] and overlap[v]:
                    repeated += k[u] * k[v]
                    if graph.has_edge(u, v):
                        e_ra += 1

        k_i = sum(k[u] for u in range(n) if in_i[u])
        k_j = sum(k[v] for v in range(n) if in_j[v])

        return e_a, e_ra, k_i * k_j / two_m, repeated / two_m

    def assert_close(self, actual: float, expected: float, tolerance: float = 1e-9) -> None:
        assert abs(actual - expected) <= tolerance, f"expected {expected}, found {actual}"
