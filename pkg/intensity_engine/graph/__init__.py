from .edgelist import (
    parse_edgelist,
    parse_ground_truth,
    read_edgelist,
    read_ground_truth,
    serialize_edgelist,
    serialize_ground_truth,
    write_edgelist,
    write_ground_truth,
)
from .graph import Graph
from .partition import Partition, apply_merge, merge_gain, modularity
