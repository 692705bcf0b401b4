import io
from typing import Dict, List, TextIO, Tuple, Union

from ..errors import EdgeListParseError, SelfLoopError
from ..utils import atomic_write
from .graph import Graph


_COMMENT = "#"


def _iterate_lines(text: Union[str, TextIO]):
    if isinstance(text, str):
        text = io.StringIO(text)

    for line_number, line in enumerate(text, start=1):
        line = line.split(_COMMENT, 1)[0].strip()
        if line:
            yield line_number, line.split()


def parse_edgelist(text: Union[str, TextIO]) -> Graph:
    """parses whitespace separated `u v` lines into a graph, duplicate edges are collapsed

    Args:
        text (Union[str, TextIO]): edge list content or an open text stream

    Raises:
        EdgeListParseError: if a line doesn't hold exactly 2 labels
        SelfLoopError: if a line connects a node to itself

    Returns:
        Graph: parsed graph with ids in first-appearance order
    """

    pairs: List[Tuple[str, str]] = []
    for line_number, tokens in _iterate_lines(text):
        if len(tokens) != 2:
            raise EdgeListParseError(line_number, f"expected 2 node labels, found {len(tokens)}")

        u, v = tokens
        if u == v:
            raise SelfLoopError(u, line_number)

        pairs.append((u, v))

    return Graph.from_labeled_edges(pairs)


def serialize_edgelist(graph: Graph) -> str:
    lines = [f"{_COMMENT} nodes={graph.n} edges={graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.labeled_edges())
    return "\n".join(lines) + "\n"


def read_edgelist(path: str) -> Graph:
    with open(path, "r") as f:
        return parse_edgelist(f)


def write_edgelist(graph: Graph, path: str) -> None:
    with atomic_write(path) as f:
        f.write(serialize_edgelist(graph))


def serialize_ground_truth(graph: Graph, assignment: List[int]) -> str:
    return "".join(f"{label} {community}\n" for label, community in zip(graph.labels, assignment))


def parse_ground_truth(text: Union[str, TextIO]) -> Dict[str, int]:
    """parses `label community_id` lines

    Args:
        text (Union[str, TextIO]): ground truth content or an open text stream

    Raises:
        EdgeListParseError: if a line is malformed

    Returns:
        Dict[str, int]: community id per node label
    """

    result = {}
    for line_number, tokens in _iterate_lines(text):
        if len(tokens) != 2:
            raise EdgeListParseError(line_number, f"expected `label community_id`, found {len(tokens)} tokens")

        label, community = tokens
        try:
            result[label] = int(community)
        except ValueError:
            raise EdgeListParseError(line_number, f"unexpected community id ({community})")

    return result


def read_ground_truth(path: str) -> Dict[str, int]:
    with open(path, "r") as f:
        return parse_ground_truth(f)


def write_ground_truth(graph: Graph, assignment: List[int], path: str) -> None:
    with atomic_write(path) as f:
        f.write(serialize_ground_truth(graph, assignment))
