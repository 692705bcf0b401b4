from .circle import Circle, circle
from .iteration import (
    IterationTrace,
    WeightMap,
    iterate_to_fixpoint,
    weighted_ci_all,
    weighted_ci_edge,
    weights_from_scores,
)
from .scores import EdgeScore, ci_all, ci_components, ci_edge, score_circles, sort_scores
