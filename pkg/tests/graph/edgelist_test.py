import os
import tempfile

from parameterized import parameterized

from intensity_engine.errors import EdgeListParseError, SelfLoopError
from intensity_engine.graph import (
    Graph,
    parse_edgelist,
    parse_ground_truth,
    read_edgelist,
    read_ground_truth,
    serialize_edgelist,
    write_edgelist,
    write_ground_truth,
)

from ..test_commons import TestCommons


class EdgeListTest(TestCommons):
    def test_comments_and_blank_lines_are_skipped(self) -> None:
        graph = parse_edgelist("# header\n\na b\n  # indented comment\nb c  # trailing\n")

        assert graph.labels == ("a", "b", "c")
        assert graph.labeled_edges() == [("a", "b"), ("b", "c")]

    def test_duplicate_edges_collapse(self) -> None:
        graph = parse_edgelist("1 2\n2 1\n1 2\n2 3\n")

        assert graph.m == 2
        assert graph.degrees == (1, 2, 1)

    @parameterized.expand([("1 2 3\n", 1), ("1 2\nlonely\n", 2), ("1 2\n\n2 3\n4\n", 4)])
    def test_malformed_line_reports_line_number(self, text: str, line_number: int) -> None:
        with self.assertRaises(EdgeListParseError) as context:
            parse_edgelist(text)

        assert context.exception.line_number == line_number

    def test_self_loop_rejected(self) -> None:
        with self.assertRaises(SelfLoopError) as context:
            parse_edgelist("1 2\n3 3\n")

        assert context.exception.line_number == 2
        assert str(context.exception).startswith("line 2: self-loop on node (3)")
        assert isinstance(context.exception, EdgeListParseError)

    def test_empty_input_gives_empty_graph(self) -> None:
        graph = parse_edgelist("# nothing here\n")

        assert graph.n == 0
        assert graph.m == 0

    def test_serialized_edge_list_parses_back(self) -> None:
        graph = self.get_florentine()
        text = serialize_edgelist(graph)

        assert text.startswith("# nodes=15 edges=20\n")
        assert parse_edgelist(text) == graph

    def test_write_and_read(self) -> None:
        graph = self.get_example2()

        with tempfile.TemporaryDirectory() as tmp_path:
            path = os.path.join(tmp_path, "nested", "example2.edges")
            write_edgelist(graph, path)

            assert read_edgelist(path) == graph
            assert os.listdir(os.path.dirname(path)) == ["example2.edges"]

    def test_ground_truth_io(self) -> None:
        graph = Graph.from_labeled_edges([("a", "b")], nodes=["a", "b", "c"])

        with tempfile.TemporaryDirectory() as tmp_path:
            path = os.path.join(tmp_path, "truth")
            write_ground_truth(graph, [0, 0, 1], path)

            assert read_ground_truth(path) == {"a": 0, "b": 0, "c": 1}

    def test_ground_truth_rejects_bad_community(self) -> None:
        with self.assertRaises(EdgeListParseError) as context:
            parse_ground_truth("a 0\nb x\n")

        assert context.exception.line_number == 2
