from intensity_engine.errors import NotAnEdgeError, SelfLoopError
from intensity_engine.graph import Graph

from ..test_commons import TestCommons


class GraphTest(TestCommons):
    def test_ids_follow_first_appearance(self) -> None:
        graph = Graph.from_labeled_edges([("z", "y"), ("y", "x")])

        assert graph.labels == ("z", "y", "x")
        assert graph.id_of("x") == 2

    def test_degree_sum_is_twice_edge_count(self) -> None:
        for seed in range(10):
            graph = self.get_random_graph(20, 0.2, seed)
            assert sum(graph.degrees) == 2 * graph.m

    def test_adjacency_is_symmetric_and_sorted(self) -> None:
        graph = self.get_florentine()

        for i in range(graph.n):
            assert list(graph.neighbors(i)) == sorted(graph.neighbors(i))
            for j in graph.neighbors(i):
                assert graph.has_edge(j, i)

    def test_isolated_nodes_are_kept(self) -> None:
        graph = Graph.from_labeled_edges([("a", "b")], nodes=["a", "b", "c"])

        assert graph.n == 3
        assert graph.isolated_nodes == frozenset([2])

    def test_edge_key_orders_labels(self) -> None:
        graph = self.get_florentine()

        assert graph.edge_key(graph.id_of("7"), graph.id_of("14")) == ("14", "7")
        assert graph.edge_key(graph.id_of("14"), graph.id_of("7")) == ("14", "7")

    def test_check_edge(self) -> None:
        graph = self.get_triangle()
        graph.check_edge(0, 1)

        self.assertRaises(NotAnEdgeError, graph.check_edge, 0, 0)

    def test_self_loop_rejected(self) -> None:
        with self.assertRaises(SelfLoopError) as context:
            Graph.from_labeled_edges([("a", "b"), ("a", "a")])

        assert context.exception.line_number is None
        assert str(context.exception) == "self-loop on node (a) is not allowed"

    def test_immutable(self) -> None:
        graph = self.get_triangle()
        self.assertRaises(AttributeError, setattr, graph, "m", 0)
