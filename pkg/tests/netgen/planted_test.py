import numpy as np
from parameterized import parameterized
from pydantic import ValidationError

from intensity_engine.arguments import PlantedConfig
from intensity_engine.errors import InfeasibleParametersError
from intensity_engine.netgen import gen_planted, planted_params

from ..test_commons import TestCommons


class PlantedParamsTest(TestCommons):
    def test_reference_setting(self) -> None:
        p_in, p_out = planted_params(1000, 10, 6, 100)

        self.assert_close(p_out, 6 / 10800, 1e-15)
        self.assert_close(p_in, 600 / 10800, 1e-15)

    def test_ratio_one_is_uniform(self) -> None:
        p_in, p_out = planted_params(1000, 10, 6, 1)

        self.assert_close(p_in, 6 / 999, 1e-15)
        self.assert_close(p_out, 6 / 999, 1e-15)

    def test_zero_degree(self) -> None:
        assert planted_params(100, 4, 0, 50) == (0, 0)

    @parameterized.expand([(10, 3, 6, 100), (100, 10, 50, 100), (100, 10, 6, 0.5)])
    def test_infeasible(self, n: int, groups: int, avg_degree: float, ratio: float) -> None:
        self.assertRaises(InfeasibleParametersError, planted_params, n, groups, avg_degree, ratio)


class PlantedTest(TestCommons):
    def test_deterministic_limit(self) -> None:
        graph, truth = gen_planted(PlantedConfig(sizes=[3, 3], p_in=1, p_out=0, seed=0))

        assert graph.m == 6
        assert truth.community_indices() == [0, 0, 0, 1, 1, 1]
        assert truth.intra_edge_count == 6

    def test_ten_groups(self) -> None:
        p_in, p_out = planted_params(500, 10, 6, 100)
        graph, truth = gen_planted(PlantedConfig(sizes=[50] * 10, p_in=p_in, p_out=p_out, seed=7))

        assert graph.n == 500
        assert truth.num_communities == 10

    def test_isolated_nodes_are_kept(self) -> None:
        graph, truth = gen_planted(PlantedConfig(sizes=[20, 20], p_in=0, p_out=0, seed=0))

        assert graph.n == 40
        assert graph.m == 0
        assert truth.num_communities == 2

    def test_seeded_determinism(self) -> None:
        config = PlantedConfig(sizes=[30] * 4, p_in=0.3, p_out=0.01, seed=4)

        first, first_truth = gen_planted(config)
        second, second_truth = gen_planted(config)

        assert first == second
        assert first_truth.assignment == second_truth.assignment

    def test_mean_degree_over_seeds(self) -> None:
        p_in, p_out = planted_params(1000, 10, 6, 100)

        degrees = []
        for seed in range(20):
            graph, _ = gen_planted(PlantedConfig(sizes=[100] * 10, p_in=p_in, p_out=p_out, seed=seed))
            degrees.append(2 * graph.m / graph.n)

        assert abs(np.mean(degrees) - 6) <= 0.6

    def test_graph_is_simple(self) -> None:
        graph, _ = gen_planted(PlantedConfig(sizes=[25] * 4, p_in=0.5, p_out=0.05, seed=2))

        assert all(i != j for i, j in graph.edges)
        assert len({(min(i, j), max(i, j)) for i, j in graph.edges}) == graph.m
        assert sum(graph.degrees) == 2 * graph.m

    @parameterized.expand([([3, 3], 0.1, 0.5), ([3, 3], 1.5, 0.1), ([], 0.5, 0.1), ([3, 0], 0.5, 0.1)])
    def test_invalid_config(self, sizes, p_in: float, p_out: float) -> None:
        self.assertRaises((AssertionError, ValidationError), PlantedConfig, sizes=sizes, p_in=p_in, p_out=p_out)
