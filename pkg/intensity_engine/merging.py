import logging
from typing import List, Optional, Tuple

import numpy as np

from .arguments import MergePolicy
from .enums import IsolatedNodeRule, StopRule, TieBreak, ZeroGainRule
from .graph import Graph, Partition, apply_merge, merge_gain
from .intensity import EdgeScore
from .utils import log_message


class MergeStep:
    """one visited edge of the merge walk"""

    __slots__ = ("edge", "absorbing", "absorbed", "gain", "accepted")

    def __init__(self, edge: Tuple[str, str], absorbing: int, absorbed: int, gain: float, accepted: bool) -> None:
        self.edge = edge
        self.absorbing = absorbing
        self.absorbed = absorbed
        self.gain = gain
        self.accepted = accepted

    def to_dict(self) -> dict:
        return {"edge": list(self.edge), "gain": self.gain, "accepted": self.accepted}

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(edge={self.edge}, gain={self.gain}, accepted={self.accepted})"


def _order_scores(scores: List[EdgeScore], policy: MergePolicy) -> List[EdgeScore]:
    if policy.tie_break == TieBreak.lexicographic:
        # scores arrive sorted with the label tie break already applied
        return scores

    rng = np.random.default_rng(policy.seed)
    keys = rng.random(len(scores))
    order = sorted(range(len(scores)), key=lambda index: (-scores[index].ci, keys[index]))
    return [scores[index] for index in order]


def _absorbing_pair(partition: Partition, community_a: int, community_b: int) -> Tuple[int, int]:
    # the larger community absorbs, equal sizes keep the smaller id
    size_a = len(partition.members[community_a])
    size_b = len(partition.members[community_b])
    if size_a > size_b or (size_a == size_b and community_a < community_b):
        return community_a, community_b
    return community_b, community_a


def _best_neighbor(graph: Graph, partition: Partition, node: int, partner: int) -> Tuple[int, float]:
    """community adjacent to the singleton `node` with the largest gain, the edge partner's community wins ties"""

    best_community = partner
    best_gain = merge_gain(graph, partition, partner, node)

    for community in sorted(partition.neighbor_communities(node)):
        if community == partner:
            continue

        gain = merge_gain(graph, partition, community, node)
        if gain > best_gain:
            best_community, best_gain = community, gain

    return best_community, best_gain


def _plan_merge(graph: Graph, partition: Partition, i: int, j: int, policy: MergePolicy) -> Tuple[int, int, float]:
    community_i = partition.community_of(i)
    community_j = partition.community_of(j)

    if policy.isolated_node_rule == IsolatedNodeRule.best_neighbor:
        singleton_i = partition.is_singleton(community_i)
        singleton_j = partition.is_singleton(community_j)

        if singleton_i != singleton_j:
            node, partner = (i, community_j) if singleton_i else (j, community_i)
            target, gain = _best_neighbor(graph, partition, node, partner)
            return target, partition.community_of(node), gain
    elif policy.isolated_node_rule != IsolatedNodeRule.edge:
        raise ValueError(f"unexpected isolated_node_rule ({policy.isolated_node_rule})")

    absorbing, absorbed = _absorbing_pair(partition, community_i, community_j)
    return absorbing, absorbed, merge_gain(graph, partition, absorbing, absorbed)


def greedy_merge(
    graph: Graph, scores: List[EdgeScore], policy: Optional[MergePolicy] = None
) -> Tuple[Partition, List[MergeStep]]:
    """walks edges by descending connect intensity from singleton communities, merging while modularity grows

    Edges inside one community are skipped. Negative gains are skipped, or end the walk under
    `StopRule.halt_on_negative`.

    Args:
        graph (Graph): the graph
        scores (List[EdgeScore]): one score per edge, sorted by descending connect intensity
        policy (Optional[MergePolicy], optional): gain rules, tie break and singleton handling. Defaults to None.

    Returns:
        Tuple[Partition, List[MergeStep]]: final partition and the log of every evaluated merge
    """

    if policy is None:
        policy = MergePolicy()

    partition = Partition.singletons(graph)
    merge_log: List[MergeStep] = []

    for score in _order_scores(scores, policy):
        i, j = score.i, score.j
        if partition.community_of(i) == partition.community_of(j):
            continue

        absorbing, absorbed, gain = _plan_merge(graph, partition, i, j, policy)
        edge = graph.edge_key(i, j)

        if gain > 0:
            accepted = True
        elif gain == 0:
            if policy.zero_gain_rule == ZeroGainRule.skip:
                accepted = False
            elif policy.zero_gain_rule == ZeroGainRule.accept:
                accepted = True
            elif policy.zero_gain_rule == ZeroGainRule.halt:
                merge_log.append(MergeStep(edge, absorbing, absorbed, gain, False))
                log_message(logging.DEBUG, f"zero gain at edge {edge}, merge walk stopped")
                break
            else:
                raise ValueError(f"unexpected zero_gain_rule ({policy.zero_gain_rule})")
        elif policy.stop_rule == StopRule.skip_negative:
            accepted = False
        elif policy.stop_rule == StopRule.halt_on_negative:
            merge_log.append(MergeStep(edge, absorbing, absorbed, gain, False))
            log_message(logging.DEBUG, f"negative gain {gain:.6f} at edge {edge}, merge walk stopped")
            break
        else:
            raise ValueError(f"unexpected stop_rule ({policy.stop_rule})")

        merge_log.append(MergeStep(edge, absorbing, absorbed, gain, accepted))
        if accepted:
            apply_merge(partition, absorbing, absorbed)

    log_message(
        logging.DEBUG,
        f"merge walk accepted {sum(step.accepted for step in merge_log)} merges, "
        f"{partition.num_communities} communities left",
    )

    return partition, merge_log
