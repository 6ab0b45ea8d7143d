"""Aggregation operators and weight-derivation schemes."""

from .scalar import giwagm, iwagm, wam, wgm
from .svnn_ops import gisvwag, isvwag, refined_group_aggregate
from .weights import (
    WeightBounds,
    check_weights,
    crispify_dm_weights,
    entropy_values,
    entropy_weights,
    lp_criteria_weights,
    maximizing_deviation_weights,
)

__all__ = [
    "wam",
    "wgm",
    "iwagm",
    "giwagm",
    "isvwag",
    "gisvwag",
    "refined_group_aggregate",
    "check_weights",
    "WeightBounds",
    "crispify_dm_weights",
    "entropy_values",
    "entropy_weights",
    "maximizing_deviation_weights",
    "lp_criteria_weights",
]
