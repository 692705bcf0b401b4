import numpy as np
from parameterized import parameterized

from intensity_engine.arguments import LouvainConfig
from intensity_engine.datasets import load_dataset
from intensity_engine.graph import Graph, Partition, modularity
from intensity_engine.louvain import WorkingGraph, aggregate_graph, local_move_pass, louvain, louvain_best_of

from ..test_commons import TestCommons


class LocalMoveTest(TestCommons):
    def test_triangle_collapses(self) -> None:
        working_graph = WorkingGraph.from_graph(self.get_triangle())
        assignment, improved = local_move_pass(working_graph, [0, 1, 2], np.random.default_rng(0))

        assert improved
        assert len(set(assignment)) == 1

    def test_two_triangles(self) -> None:
        graph = self.get_two_triangles()
        working_graph = WorkingGraph.from_graph(graph)
        assignment, _ = local_move_pass(working_graph, list(range(graph.n)), np.random.default_rng(1))

        assert len(set(assignment)) == 2
        self.assert_close(working_graph.modularity(assignment), 0.5, 1e-12)

    def test_optimal_partition_is_not_improved(self) -> None:
        working_graph = WorkingGraph.from_graph(self.get_two_triangles())
        assignment, improved = local_move_pass(working_graph, [0, 0, 0, 3, 3, 3], np.random.default_rng(0))

        assert not improved
        assert assignment == [0, 0, 0, 3, 3, 3]


class AggregateTest(TestCommons):
    def test_identity_aggregation(self) -> None:
        graph = self.get_florentine()
        working_graph = WorkingGraph.from_graph(graph)
        aggregated = aggregate_graph(working_graph, list(range(graph.n)))

        assert aggregated.adjacency == working_graph.adjacency
        assert aggregated.self_loops == [0.0] * graph.n

    def test_single_community(self) -> None:
        graph = self.get_florentine()
        aggregated = aggregate_graph(WorkingGraph.from_graph(graph), [0] * graph.n)

        assert aggregated.n == 1
        assert aggregated.self_loops == [2 * graph.m]
        assert aggregated.total_weight == 2 * graph.m

    def test_two_triangles(self) -> None:
        aggregated = aggregate_graph(WorkingGraph.from_graph(self.get_two_triangles()), [0, 0, 0, 3, 3, 3])

        assert aggregated.self_loops == [6, 6]
        assert aggregated.adjacency == [{}, {}]

    @parameterized.expand([(seed,) for seed in range(5)])
    def test_aggregation_preserves_modularity(self, seed: int) -> None:
        graph = self.get_random_graph(30, 0.15, seed)
        assignment = [node % 5 for node in range(graph.n)]

        aggregated = aggregate_graph(WorkingGraph.from_graph(graph), assignment)
        expected = modularity(graph, Partition.from_assignment(graph, assignment))

        self.assert_close(aggregated.modularity(list(range(aggregated.n))), expected, 1e-12)
        assert aggregated.total_weight == 2 * graph.m


class LouvainTest(TestCommons):
    def test_florentine_best_of_10(self) -> None:
        report = louvain_best_of(self.get_florentine(), seeds=range(10))
        self.assert_close(report.modularity, 0.3979, 0.01)

    def test_les_miserables_best_of_10(self) -> None:
        report = louvain_best_of(load_dataset("lesmis"), seeds=range(10))
        self.assert_close(report.modularity, 0.5527, 0.01)

    def test_example2_reaches_intensity_partition(self) -> None:
        report = louvain_best_of(self.get_example2(), seeds=range(10))
        assert report.modularity >= 0.283203125 - 1e-9

    @parameterized.expand([(seed,) for seed in range(5)])
    def test_reproducible_per_seed(self, seed: int) -> None:
        graph = self.get_random_graph(60, 0.08, seed)

        first = louvain(graph, LouvainConfig(seed=seed))
        second = louvain(graph, LouvainConfig(seed=seed))

        assert first.communities == second.communities
        assert first.modularity == second.modularity

    @parameterized.expand([(seed,) for seed in range(5)])
    def test_levels_do_not_decrease_modularity(self, seed: int) -> None:
        graph = self.get_random_graph(80, 0.06, seed)
        report = louvain(graph, LouvainConfig(seed=seed))

        levels = report.level_modularity
        for previous, current in zip(levels, levels[1:]):
            assert current >= previous - 1e-12

        self.assert_close(levels[-1], report.modularity, 1e-12)
        self.assert_close(modularity(graph, report.partition), report.modularity, 1e-12)

    def test_isolated_nodes_stay_alone(self) -> None:
        graph = Graph.from_labeled_edges([("a", "b"), ("b", "c"), ("a", "c")], nodes=["z"])
        report = louvain(graph)

        assert ["z"] in report.communities
        assert report.num_communities == 2

    def test_report_records_seed(self) -> None:
        report = louvain_best_of(self.get_triangle(), LouvainConfig(), seeds=[5, 6])
        assert report.seed in (5, 6)
