import networkx as nx
from parameterized import parameterized

from intensity_engine.errors import EmptyGraphError, InvalidMergeError, UnknownCommunityError
from intensity_engine.graph import Graph, Partition, apply_merge, merge_gain, modularity

from ..test_commons import TestCommons


class PartitionTest(TestCommons):
    def test_singleton_modularity(self) -> None:
        graph = self.get_triangle()
        self.assert_close(modularity(graph, Partition.singletons(graph)), -1 / 3, 1e-12)

    def test_single_community_modularity_is_zero(self) -> None:
        graph = self.get_florentine()
        partition = Partition.from_assignment(graph, [0] * graph.n)

        self.assert_close(modularity(graph, partition), 0, 1e-12)

    def test_two_triangles(self) -> None:
        graph = self.get_two_triangles()
        partition = Partition.from_communities(graph, [["0", "1", "2"], ["3", "4", "5"]])

        self.assert_close(modularity(graph, partition), 0.5, 1e-12)
        assert partition.intra_edge_count == 6
        assert partition.inter_edge_count == 0

    def test_empty_graph(self) -> None:
        graph = Graph.from_labeled_edges([], nodes=["a", "b"])
        self.assertRaises(EmptyGraphError, modularity, graph, Partition.singletons(graph))

    @parameterized.expand([(seed,) for seed in range(5)])
    def test_modularity_matches_networkx(self, seed: int) -> None:
        graph = self.get_random_graph(25, 0.15, seed)
        if graph.m == 0:
            self.skipTest("graph without edges")

        assignment = [node % 4 for node in range(graph.n)]
        partition = Partition.from_assignment(graph, assignment)

        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(graph.n))
        nx_graph.add_edges_from(graph.edges)
        communities = [set(members) for members in partition.communities()]

        self.assert_close(modularity(graph, partition), nx.community.modularity(nx_graph, communities), 1e-12)

    @parameterized.expand([(seed,) for seed in range(5)])
    def test_merge_gain_matches_recomputed_modularity(self, seed: int) -> None:
        graph = self.get_random_graph(20, 0.2, seed)
        partition = Partition.from_assignment(graph, [node % 6 for node in range(graph.n)])

        while partition.num_communities > 1:
            a, b = sorted(partition.members)[:2]

            before = modularity(graph, partition)
            gain = merge_gain(graph, partition, a, b)
            apply_merge(partition, a, b)

            self.assert_close(modularity(graph, partition) - before, gain, 1e-12)

    def test_merge_gain_of_non_adjacent_communities_is_non_positive(self) -> None:
        graph = self.get_two_triangles()
        partition = Partition.singletons(graph)

        assert merge_gain(graph, partition, 0, 3) < 0

    def test_apply_merge_updates_aggregates(self) -> None:
        graph = self.get_triangle()
        partition = Partition.singletons(graph)

        apply_merge(partition, 0, 1)

        assert partition.num_communities == 2
        assert partition.total_degree[0] == 4
        assert partition.internal_edges[0] == 1
        assert partition.community_of(1) == 0
        assert partition.neighbor_communities(2) == {0: 2}

    def test_invalid_merges(self) -> None:
        graph = self.get_triangle()
        partition = Partition.singletons(graph)

        self.assertRaises(InvalidMergeError, merge_gain, graph, partition, 1, 1)
        self.assertRaises(UnknownCommunityError, merge_gain, graph, partition, 0, 7)
        self.assertRaises(InvalidMergeError, apply_merge, partition, 2, 2)

    def test_from_assignment_relabels_to_founding_member(self) -> None:
        graph = self.get_two_triangles()
        partition = Partition.from_assignment(graph, [9, 9, 9, 4, 4, 4])

        assert partition.assignment == [0, 0, 0, 3, 3, 3]
        assert partition.community_indices() == [0, 0, 0, 1, 1, 1]
        assert partition.labeled_communities() == [["0", "1", "2"], ["3", "4", "5"]]

    def test_copy_is_independent(self) -> None:
        graph = self.get_triangle()
        partition = Partition.singletons(graph)
        copied = partition.copy()

        apply_merge(copied, 0, 1)

        assert partition.num_communities == 3
        assert copied.num_communities == 2
